#ifndef XTALTEXT_CRYSTAL_HPP
#define XTALTEXT_CRYSTAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "xtaltext/elements.hpp"
#include "xtaltext/lattice.hpp"

namespace xtal {

struct Site {
    std::string element;
    Vec3 frac;  // wrapped to [0, 1)
};

/// Periodic crystal: lattice matrix plus an ordered site list.
struct Crystal {
    Mat3 lattice;
    std::vector<Site> sites;

    void validate(const ElementTable& table = ElementTable::builtin()) const {
        if (lattice.det() <= 0.0) {
            throw InvalidLatticeError("crystal lattice must be right-handed");
        }
        if (sites.empty()) {
            throw InvalidStructureError("crystal needs at least one site");
        }
        for (std::size_t i = 0; i < sites.size(); ++i) {
            if (!table.contains(sites[i].element)) {
                throw MissingElementDataError("unknown element '" + sites[i].element + "'");
            }
            for (int k = 0; k < 3; ++k) {
                if (!(sites[i].frac[k] >= 0.0 && sites[i].frac[k] < 1.0)) {
                    throw InvalidStructureError("site coordinates must be wrapped to [0,1)");
                }
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (min_image_frac_distance(sites[i].frac, sites[j].frac) < 1e-6) {
                    throw InvalidStructureError(
                        "duplicate site at index " + std::to_string(i));
                }
            }
        }
    }

    double volume() const { return lattice.det(); }
};

/// Element counts; keys ordered alphabetically by symbol.
using Composition = std::map<std::string, int>;

inline Composition composition(const Crystal& c) {
    Composition counts;
    for (const auto& s : c.sites) ++counts[s.element];
    return counts;
}

inline Composition reduced(const Composition& comp) {
    int g = 0;
    for (const auto& [sym, n] : comp) g = std::gcd(g, n);
    Composition out;
    for (const auto& [sym, n] : comp) out[sym] = n / g;
    return out;
}

inline constexpr double kAmuToGram = 1.66053906660e-24;
inline constexpr double kCubicAngstromToCm3 = 1e-24;

inline double density(const Crystal& c,
                      const ElementTable& table = ElementTable::builtin()) {
    double mass = 0.0;
    for (const auto& s : c.sites) mass += table.get(s.element).mass_amu;
    return mass * kAmuToGram / (c.volume() * kCubicAngstromToCm3);
}

/// "CaTiO3" -> {Ca:1, Ti:1, O:3}. Case-sensitive element symbols.
inline Composition parse_formula(const std::string& formula) {
    Composition comp;
    std::size_t i = 0;
    while (i < formula.size()) {
        if (!std::isupper(static_cast<unsigned char>(formula[i]))) {
            throw Error("bad formula '" + formula + "' at position " + std::to_string(i));
        }
        std::string sym(1, formula[i++]);
        while (i < formula.size() && std::islower(static_cast<unsigned char>(formula[i]))) {
            sym += formula[i++];
        }
        int count = 0;
        while (i < formula.size() && std::isdigit(static_cast<unsigned char>(formula[i]))) {
            count = count * 10 + (formula[i++] - '0');
        }
        comp[sym] += count ? count : 1;
    }
    if (comp.empty()) throw Error("empty formula");
    return comp;
}

/// Anonymize a composition: reduce by the gcd, sort by (count ascending,
/// symbol alphabetical), relabel A, B, C, ...; unit counts are omitted.
inline std::string anonymized_formula(const Composition& comp) {
    if (comp.empty()) throw Error("empty composition");
    const Composition red = reduced(comp);
    std::vector<std::pair<int, std::string>> order;
    for (const auto& [sym, n] : red) order.emplace_back(n, sym);
    std::sort(order.begin(), order.end());
    std::string out;
    char label = 'A';
    for (const auto& [n, sym] : order) {
        out += label++;
        if (n > 1) out += std::to_string(n);
    }
    return out;
}

inline std::string format_composition(const Composition& comp) {
    std::string out;
    for (const auto& [sym, n] : comp) {
        out += sym;
        if (n > 1) out += std::to_string(n);
    }
    return out;
}

}  // namespace xtal

#endif
