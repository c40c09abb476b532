#ifndef XTALTEXT_SYMMETRY_HPP
#define XTALTEXT_SYMMETRY_HPP

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xtaltext/crystal.hpp"
#include "xtaltext/data/spacegroups_inc.hpp"
#include "xtaltext/errors.hpp"
#include "xtaltext/lattice.hpp"

namespace xtal {

/// Translation component as a rational with denominator 12; every space-group
/// translation in the standard settings reduces to denominator 1, 2, 3, 4 or 6.
struct Frac12 {
    int twelfths = 0;  // in [0, 12)

    static Frac12 from(int num, int den) {
        if (den <= 0 || 12 % den != 0) {
            throw Error("unsupported translation denominator " + std::to_string(den));
        }
        int t = num * (12 / den) % 12;
        if (t < 0) t += 12;
        return Frac12{t};
    }

    double value() const { return twelfths / 12.0; }

    std::string str() const {
        if (twelfths == 0) return "0";
        int g = std::gcd(twelfths, 12);
        return std::to_string(twelfths / g) + "/" + std::to_string(12 / g);
    }

    auto operator<=>(const Frac12&) const = default;
};

/// Symmetry operation in fractional coordinates: f -> R f + t (mod 1).
struct SymOp {
    std::array<std::array<int, 3>, 3> rot{};
    std::array<Frac12, 3> trans{};

    static SymOp identity() {
        SymOp op;
        op.rot = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        return op;
    }

    int rot_det() const {
        const auto& m = rot;
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    /// this after other: (R1,t1)(R2,t2) = (R1 R2, R1 t2 + t1), mod 1.
    SymOp compose(const SymOp& other) const {
        SymOp out;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s += rot[i][k] * other.rot[k][j];
                out.rot[i][j] = s;
            }
            int t = trans[i].twelfths;
            for (int k = 0; k < 3; ++k) t += rot[i][k] * other.trans[k].twelfths;
            t %= 12;
            if (t < 0) t += 12;
            out.trans[i] = Frac12{t};
        }
        return out;
    }

    auto operator<=>(const SymOp&) const = default;
};

inline Vec3 apply_op(const SymOp& op, const Vec3& f) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        out[i] = op.rot[i][0] * f[0] + op.rot[i][1] * f[1] + op.rot[i][2] * f[2] +
                 op.trans[i].value();
    }
    return wrap_fractional(out);
}

namespace detail {

/// Parse one coordinate expression like "-y+x" or "z+1/3" or "1/2-x".
inline void parse_symop_component(const std::string& expr, int component,
                                  SymOp& op) {
    int sign = 1;
    bool have_sign = false;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("bad symmetry expression '" + expr + "': " + what, 1, i + 1);
    };
    bool any_term = false;
    while (i < expr.size()) {
        char ch = expr[i];
        if (ch == ' ' || ch == '\t') {
            ++i;
        } else if (ch == '+') {
            sign = 1;
            have_sign = true;
            ++i;
        } else if (ch == '-') {
            sign = -1;
            have_sign = true;
            ++i;
        } else if (ch == 'x' || ch == 'y' || ch == 'z') {
            op.rot[component][ch - 'x'] += sign;
            sign = 1;
            have_sign = false;
            any_term = true;
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            int num = 0;
            while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
                num = num * 10 + (expr[i++] - '0');
            }
            int den = 1;
            if (i < expr.size() && expr[i] == '/') {
                ++i;
                if (i >= expr.size() || !std::isdigit(static_cast<unsigned char>(expr[i]))) {
                    fail("missing denominator");
                }
                den = 0;
                while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
                    den = den * 10 + (expr[i++] - '0');
                }
            }
            if (den != 1 && den != 2 && den != 3 && den != 4 && den != 6 && den != 12) {
                fail("unsupported denominator " + std::to_string(den));
            }
            if (i < expr.size() && (expr[i] == 'x' || expr[i] == 'y' || expr[i] == 'z')) {
                // a numeric coefficient on a variable, e.g. "2x"
                if (den != 1) fail("fractional variable coefficient");
                op.rot[component][expr[i] - 'x'] += sign * num;
                ++i;
                sign = 1;
                have_sign = false;
                any_term = true;
                continue;
            }
            int t = op.trans[component].twelfths + sign * num * (12 / den);
            t %= 12;
            if (t < 0) t += 12;
            op.trans[component] = Frac12{t};
            sign = 1;
            have_sign = false;
            any_term = true;
        } else {
            fail(std::string("unexpected character '") + ch + "'");
        }
    }
    if (have_sign || !any_term) fail("incomplete expression");
}

}  // namespace detail

/// Parse "x,y,z"-triplet notation (as in CIF _symmetry_equiv_pos_as_xyz).
inline SymOp parse_symop(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) {
        throw ParseError("symmetry operation needs three comma-separated parts", 1);
    }
    SymOp op;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) op.rot[i][j] = 0;
        detail::parse_symop_component(parts[i], i, op);
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (op.rot[i][j] < -1 || op.rot[i][j] > 1) {
                throw ParseError("rotation entries must lie in {-1,0,1}", 1);
            }
        }
    }
    int d = op.rot_det();
    if (d != 1 && d != -1) {
        throw ParseError("rotation part is not unimodular", 1);
    }
    return op;
}

struct SpaceGroup {
    int number = 0;
    std::string hm_symbol;
    std::vector<SymOp> ops;
};

/// Registry of the 230 standard-setting groups, loaded once and shared.
class SpaceGroupTable {
public:
    static SpaceGroupTable from_text(const std::string& text) {
        SpaceGroupTable table;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        SpaceGroup current;
        std::size_t expected = 0;
        auto flush = [&]() {
            if (current.number == 0) return;
            if (current.ops.size() != expected) {
                throw ParseError("group " + std::to_string(current.number) +
                                     " op count mismatch",
                                 lineno);
            }
            validate_group(current);
            table.by_symbol_[current.hm_symbol] = current.number;
            table.groups_[current.number] = std::move(current);
            current = SpaceGroup{};
        };
        while (std::getline(in, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            if (line.rfind("#SG ", 0) == 0) {
                flush();
                std::istringstream hdr(line.substr(4));
                if (!(hdr >> current.number >> current.hm_symbol >> expected) ||
                    current.number < 1 || current.number > 230) {
                    throw ParseError("malformed #SG header", lineno);
                }
            } else if (line[0] == '#') {
                continue;
            } else {
                if (current.number == 0) throw ParseError("operation outside a group block", lineno);
                current.ops.push_back(parse_symop(line));
            }
        }
        flush();
        if (table.groups_.size() != 230) {
            throw ParseError("expected 230 groups, found " + std::to_string(table.groups_.size()),
                             lineno);
        }
        return table;
    }

    static const SpaceGroupTable& builtin() {
        static const SpaceGroupTable table = from_text(data::kSpaceGroupTableText);
        return table;
    }

    const SpaceGroup& by_number(int number) const {
        auto it = groups_.find(number);
        if (it == groups_.end()) {
            throw UnknownGroupError("unknown space group number " + std::to_string(number));
        }
        return it->second;
    }

    const SpaceGroup& by_symbol(const std::string& hm) const {
        auto it = by_symbol_.find(hm);
        if (it == by_symbol_.end()) {
            throw UnknownGroupError("unknown or non-standard space group symbol '" + hm + "'");
        }
        return groups_.at(it->second);
    }

    bool has_symbol(const std::string& hm) const { return by_symbol_.count(hm) != 0; }

private:
    /// Group axioms: identity present, closed under composition, every op
    /// invertible within the set.
    static void validate_group(const SpaceGroup& g) {
        const SymOp ident = SymOp::identity();
        std::map<SymOp, bool> members;
        for (const auto& op : g.ops) members[op] = true;
        if (members.size() != g.ops.size()) {
            throw Error("group " + std::to_string(g.number) + " has duplicate ops");
        }
        if (!members.count(ident)) {
            throw Error("group " + std::to_string(g.number) + " lacks the identity");
        }
        for (const auto& a : g.ops) {
            bool has_inverse = false;
            for (const auto& b : g.ops) {
                const SymOp c = a.compose(b);
                if (!members.count(c)) {
                    throw Error("group " + std::to_string(g.number) + " not closed");
                }
                if (c == ident) has_inverse = true;
            }
            if (!has_inverse) {
                throw Error("group " + std::to_string(g.number) + " op lacks an inverse");
            }
        }
    }

    std::map<int, SpaceGroup> groups_;
    std::map<std::string, int> by_symbol_;
};

inline const SpaceGroup& load_space_group(int number) {
    return SpaceGroupTable::builtin().by_number(number);
}

inline const SpaceGroup& load_space_group(const std::string& hm_symbol) {
    return SpaceGroupTable::builtin().by_symbol(hm_symbol);
}

/// Default tolerance for matching symmetry-equivalent points (fractional).
inline constexpr double kDefaultSymEps = 1e-3;
/// Looser default for structures parsed from 2-decimal quantized text.
inline constexpr double kTextSymEps = 2e-2;

struct WyckoffOrbit {
    Site representative;
    std::vector<Vec3> members;

    std::size_t multiplicity() const { return members.size(); }
};

struct WyckoffDecomposition {
    const SpaceGroup* group = nullptr;
    std::vector<WyckoffOrbit> orbits;
};

/// Orbit of a representative site: all distinct images under the group ops,
/// in generation order (identity image first).
inline WyckoffOrbit orbit(const SpaceGroup& g, const Site& rep,
                          double eps = kDefaultSymEps) {
    WyckoffOrbit out;
    out.representative = rep;
    out.representative.frac = wrap_fractional(rep.frac);
    for (const auto& op : g.ops) {
        const Vec3 p = apply_op(op, out.representative.frac);
        bool known = false;
        for (const auto& q : out.members) {
            if (min_image_frac_distance(p, q) < eps) {
                known = true;
                break;
            }
        }
        if (!known) out.members.push_back(p);
    }
    return out;
}

/// Greedy orbit cover in site order. Throws NotSymmetricError when an orbit
/// member has no matching unassigned site of the same element.
inline WyckoffDecomposition decompose(const Crystal& c, const SpaceGroup& g,
                                      double eps = kDefaultSymEps) {
    WyckoffDecomposition out;
    out.group = &g;
    std::vector<bool> assigned(c.sites.size(), false);
    for (std::size_t i = 0; i < c.sites.size(); ++i) {
        if (assigned[i]) continue;
        WyckoffOrbit orb = orbit(g, c.sites[i], eps);
        for (const auto& member : orb.members) {
            bool matched = false;
            for (std::size_t j = 0; j < c.sites.size(); ++j) {
                if (assigned[j] || c.sites[j].element != c.sites[i].element) continue;
                if (min_image_frac_distance(member, c.sites[j].frac) < eps) {
                    assigned[j] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                throw NotSymmetricError(
                    "structure is not symmetric under " + g.hm_symbol +
                        ": orbit of site " + std::to_string(i) + " has unmatched members",
                    i);
            }
        }
        out.orbits.push_back(std::move(orb));
    }
    return out;
}

/// Union of the orbits of all representatives; inverse of decompose.
inline Crystal expand(const SpaceGroup& g, const std::vector<Site>& reps,
                      const LatticeParameters& lattice,
                      double eps = kDefaultSymEps) {
    if (reps.empty()) {
        throw InvalidStructureError("expand needs at least one representative");
    }
    Crystal c;
    c.lattice = lattice_matrix_from_parameters(lattice);
    for (const auto& rep : reps) {
        const WyckoffOrbit orb = orbit(g, rep, eps);
        for (const auto& member : orb.members) {
            bool merged = false;
            for (const auto& existing : c.sites) {
                if (min_image_frac_distance(member, existing.frac) < eps) {
                    if (existing.element != rep.element) {
                        throw InvalidStructureError(
                            "representatives of different elements collide at the same point");
                    }
                    merged = true;
                    break;
                }
            }
            if (!merged) c.sites.push_back(Site{rep.element, member});
        }
    }
    return c;
}

/// True iff every group op maps the site set onto itself element-preservingly.
inline bool verify(const Crystal& c, const SpaceGroup& g,
                   double eps = kDefaultSymEps) {
    try {
        decompose(c, g, eps);
        return true;
    } catch (const NotSymmetricError&) {
        return false;
    }
}

}  // namespace xtal

#endif
