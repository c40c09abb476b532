#ifndef XTALTEXT_SGS_HPP
#define XTALTEXT_SGS_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "xtaltext/crystal.hpp"
#include "xtaltext/symmetry.hpp"

namespace xtal {

/// Parsed space-group text record: HM symbol, quantized lattice parameters
/// (lengths 1 decimal, angles integer-or-1-decimal), 2-decimal Wyckoff
/// representatives.
struct SgsRecord {
    std::string hm_symbol;
    LatticeParameters lattice{1, 1, 1, 90, 90, 90};
    std::vector<Site> representatives;
};

namespace detail {

inline std::string format_length(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

inline std::string format_angle(double v) {
    const double rounded = std::round(v);
    if (std::abs(v - rounded) < 1e-6) {
        return std::to_string(static_cast<long long>(rounded));
    }
    return format_length(v);
}

inline std::string format_coord(double f) {
    // wrap, quantize to 2 decimals, wrap the quantized value again so the
    // output stays in [0.00, 0.99]
    double w = f - std::floor(f);
    double q = std::round(w * 100.0) / 100.0;
    if (q >= 1.0) q -= 1.0;
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", q);
    return buf;
}

/// Split into trimmed lines; strips CR and the "### " presentation prefix.
inline std::vector<std::string> payload_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    auto flush = [&]() {
        if (cur.rfind("### ", 0) == 0) cur.erase(0, 4);
        else if (cur.rfind("###", 0) == 0) cur.erase(0, 3);
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        lines.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '\n') flush();
        else if (ch != '\r') cur += ch;
    }
    flush();
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

inline std::vector<double> parse_number_line(const std::string& line,
                                             std::size_t lineno,
                                             std::size_t expected) {
    std::vector<double> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        if (i >= line.size()) break;
        std::size_t consumed = 0;
        double v;
        try {
            v = std::stod(line.substr(i), &consumed);
        } catch (const std::exception&) {
            throw ParseError("non-numeric token in '" + line + "'", lineno, i + 1);
        }
        if (consumed == 0 || (i + consumed < line.size() && line[i + consumed] != ' ')) {
            throw ParseError("non-numeric token in '" + line + "'", lineno, i + 1);
        }
        out.push_back(v);
        i += consumed;
    }
    if (out.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " numbers, found " +
                             std::to_string(out.size()),
                         lineno);
    }
    return out;
}

inline bool looks_like_element(const std::string& line) {
    if (line.empty() || line.size() > 2) return false;
    if (!std::isupper(static_cast<unsigned char>(line[0]))) return false;
    return line.size() == 1 || std::islower(static_cast<unsigned char>(line[1]));
}

/// Shared body: lattice lines followed by element/coordinate pairs.
inline void parse_body(const std::vector<std::string>& lines, std::size_t first,
                       LatticeParameters& lattice, std::vector<Site>& sites) {
    if (lines.size() < first + 2) {
        throw ParseError("truncated record: missing lattice lines", lines.size());
    }
    const auto lengths = parse_number_line(lines[first], first + 1, 3);
    const auto angles = parse_number_line(lines[first + 1], first + 2, 3);
    lattice = LatticeParameters{lengths[0], lengths[1], lengths[2],
                                angles[0],  angles[1],  angles[2]};
    lattice.validate();
    std::size_t i = first + 2;
    if (i >= lines.size()) {
        throw ParseError("record lists no atoms", lines.size());
    }
    while (i < lines.size()) {
        const std::string& el = lines[i];
        if (!looks_like_element(el)) {
            throw ParseError("expected an element symbol, found '" + el + "'", i + 1);
        }
        if (!ElementTable::builtin().contains(el)) {
            throw ParseError("unknown element '" + el + "'", i + 1);
        }
        if (i + 1 >= lines.size()) {
            throw ParseError("element '" + el + "' has no coordinate line", i + 1);
        }
        const auto xyz = parse_number_line(lines[i + 1], i + 2, 3);
        for (double v : xyz) {
            if (v < 0.0 || v >= 1.0) {
                throw ParseError("coordinate out of [0,1)", i + 2);
            }
        }
        sites.push_back(Site{el, Vec3{xyz[0], xyz[1], xyz[2]}});
        i += 2;
    }
}

}  // namespace detail

/// Space-group text: HM symbol, lattice lines, one element/coordinate pair
/// per occupied Wyckoff position (decompose order). No trailing newline.
inline std::string serialize_sgs(const Crystal& c, const SpaceGroup& g,
                                 double eps = kDefaultSymEps) {
    const WyckoffDecomposition dec = decompose(c, g, eps);  // throws if not symmetric
    const LatticeParameters p = lattice_parameters_from_matrix(c.lattice);
    std::string out = g.hm_symbol;
    out += "\n" + detail::format_length(p.a) + " " + detail::format_length(p.b) + " " +
           detail::format_length(p.c);
    out += "\n" + detail::format_angle(p.alpha) + " " + detail::format_angle(p.beta) +
           " " + detail::format_angle(p.gamma);
    for (const auto& orb : dec.orbits) {
        out += "\n" + orb.representative.element;
        out += "\n" + detail::format_coord(orb.representative.frac[0]) + " " +
               detail::format_coord(orb.representative.frac[1]) + " " +
               detail::format_coord(orb.representative.frac[2]);
    }
    return out;
}

inline SgsRecord parse_sgs(const std::string& text) {
    const auto lines = detail::payload_lines(text);
    if (lines.empty()) throw ParseError("empty record", 1);
    SgsRecord rec;
    rec.hm_symbol = lines[0];
    if (!SpaceGroupTable::builtin().has_symbol(rec.hm_symbol)) {
        throw ParseError("unknown space group symbol '" + rec.hm_symbol + "'", 1);
    }
    detail::parse_body(lines, 1, rec.lattice, rec.representatives);
    return rec;
}

inline Crystal sgs_to_crystal(const SgsRecord& rec, double eps = kTextSymEps) {
    return expand(load_space_group(rec.hm_symbol), rec.representatives, rec.lattice,
                  eps);
}

/// XYZ-style text: same grammar as SGS minus the symbol line, every site listed.
inline std::string serialize_xyz(const Crystal& c) {
    const LatticeParameters p = lattice_parameters_from_matrix(c.lattice);
    std::string out = detail::format_length(p.a) + " " + detail::format_length(p.b) +
                      " " + detail::format_length(p.c);
    out += "\n" + detail::format_angle(p.alpha) + " " + detail::format_angle(p.beta) +
           " " + detail::format_angle(p.gamma);
    for (const auto& s : c.sites) {
        out += "\n" + s.element;
        out += "\n" + detail::format_coord(s.frac[0]) + " " +
               detail::format_coord(s.frac[1]) + " " + detail::format_coord(s.frac[2]);
    }
    return out;
}

inline Crystal parse_xyz(const std::string& text) {
    const auto lines = detail::payload_lines(text);
    LatticeParameters lattice{1, 1, 1, 90, 90, 90};
    std::vector<Site> sites;
    detail::parse_body(lines, 0, lattice, sites);
    Crystal c;
    c.lattice = lattice_matrix_from_parameters(lattice);
    c.sites = std::move(sites);
    c.validate();
    return c;
}

enum class TextFormat { sgs, xyz };

inline std::string to_string(TextFormat f) {
    return f == TextFormat::sgs ? "sgs" : "xyz";
}

inline TextFormat parse_format(const std::string& s) {
    if (s == "sgs") return TextFormat::sgs;
    if (s == "xyz") return TextFormat::xyz;
    throw ConfigError("unknown format '" + s + "' (expected sgs or xyz)");
}

inline std::string serialize_structure(const Crystal& c, TextFormat format,
                                       const SpaceGroup& g,
                                       double eps = kDefaultSymEps) {
    return format == TextFormat::sgs ? serialize_sgs(c, g, eps) : serialize_xyz(c);
}

inline Crystal parse_structure(const std::string& text, TextFormat format,
                               double eps = kTextSymEps) {
    return format == TextFormat::sgs ? sgs_to_crystal(parse_sgs(text), eps)
                                     : parse_xyz(text);
}

}  // namespace xtal

#endif
