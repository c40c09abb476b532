#ifndef XTALTEXT_FINGERPRINT_HPP
#define XTALTEXT_FINGERPRINT_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "xtaltext/crystal.hpp"

namespace xtal {

enum class FingerprintKind { structure, composition };

/// Fixed-length descriptor; distances are only meaningful between vectors of
/// the same kind produced by the same configuration.
struct FingerprintVector {
    std::vector<double> values;
    FingerprintKind kind = FingerprintKind::structure;
    std::string config_id;
};

inline double fingerprint_distance(const FingerprintVector& a,
                                   const FingerprintVector& b) {
    if (a.kind != b.kind || a.config_id != b.config_id ||
        a.values.size() != b.values.size()) {
        throw ConfigError("fingerprints come from different configurations");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

struct StructureFingerprintConfig {
    int neighbor_count = 12;  // M nearest periodic neighbors per site

    std::string config_id() const {
        return "nbr-dist-m" + std::to_string(neighbor_count);
    }
};

namespace detail {

/// Perpendicular widths of the cell along each lattice direction
/// (volume / face area); lower-bounds the distance gained per image shell.
inline double min_perpendicular_width(const Mat3& m) {
    const double vol = m.det();
    double w = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
        const Vec3& u = m[(k + 1) % 3];
        const Vec3& v = m[(k + 2) % 3];
        const Vec3 cr{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                      u[0] * v[1] - u[1] * v[0]};
        w = std::min(w, vol / norm(cr));
    }
    return w;
}

/// Sorted distances from site `i` to its `m` nearest periodic neighbors
/// (all images of all sites, the zero self-image excluded). The image box is
/// grown until the m-th distance is provably covered.
inline std::vector<double> nearest_neighbor_distances(const Crystal& c,
                                                      std::size_t i, int m) {
    const double width = min_perpendicular_width(c.lattice);
    for (int radius = 2;; ++radius) {
        std::vector<double> dists;
        for (const auto& other : c.sites) {
            const Vec3 d0 = other.frac - c.sites[i].frac;
            for (int a = -radius; a <= radius; ++a) {
                for (int b = -radius; b <= radius; ++b) {
                    for (int cc = -radius; cc <= radius; ++cc) {
                        const Vec3 d{d0[0] + a, d0[1] + b, d0[2] + cc};
                        const double r = norm(frac_to_cart(c.lattice, d));
                        if (r > 1e-12) dists.push_back(r);
                    }
                }
            }
        }
        std::sort(dists.begin(), dists.end());
        // images outside the box are at least (radius - 1) * width away
        const double guaranteed = (radius - 1) * width;
        if (dists.size() >= static_cast<std::size_t>(m) &&
            dists[m - 1] < guaranteed) {
            dists.resize(m);
            return dists;
        }
    }
}

}  // namespace detail

/// Per site: sorted distances to the M nearest periodic neighbors, divided by
/// the smallest; structure vector = per-dimension mean then per-dimension
/// standard deviation over sites (length 2M). Scale-invariant.
inline FingerprintVector structure_fingerprint(
    const Crystal& c, const StructureFingerprintConfig& cfg = {}) {
    if (c.sites.empty()) {
        throw InvalidStructureError("fingerprint needs at least one site");
    }
    const int m = cfg.neighbor_count;
    const std::size_t n = c.sites.size();
    std::vector<std::vector<double>> per_site(n);
    for (std::size_t i = 0; i < n; ++i) {
        per_site[i] = detail::nearest_neighbor_distances(c, i, m);
        const double first = per_site[i][0];
        for (double& d : per_site[i]) d /= first;
    }
    FingerprintVector fp;
    fp.kind = FingerprintKind::structure;
    fp.config_id = cfg.config_id();
    fp.values.resize(2 * m);
    for (int d = 0; d < m; ++d) {
        double mean = 0.0;
        for (const auto& row : per_site) mean += row[d];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (const auto& row : per_site) var += (row[d] - mean) * (row[d] - mean);
        var /= static_cast<double>(n);
        fp.values[d] = mean;
        fp.values[m + d] = std::sqrt(var);
    }
    return fp;
}

struct CompositionFingerprintConfig {
    // per-dimension scale factors; empty means all 1
    std::vector<double> normalization;
    std::string label = "elem-stats-v1";

    std::string config_id() const { return label; }
};

/// For each element property (atomic number, mass, covalent radius,
/// electronegativity): fraction-weighted mean, fraction-weighted mean absolute
/// deviation, min, max — length 16, then scaled by cfg.normalization.
inline FingerprintVector composition_fingerprint(
    const Composition& comp, const CompositionFingerprintConfig& cfg = {},
    const ElementTable& table = ElementTable::builtin()) {
    if (comp.empty()) throw Error("empty composition");
    double total = 0.0;
    for (const auto& [sym, n] : comp) {
        if (!table.contains(sym)) {
            throw MissingElementDataError("unknown element '" + sym + "'");
        }
        total += n;
    }
    FingerprintVector fp;
    fp.kind = FingerprintKind::composition;
    fp.config_id = cfg.config_id();
    auto property = [&](const std::string& sym, int which) {
        const ElementData& e = table.get(sym);
        switch (which) {
            case 0: return static_cast<double>(e.atomic_number);
            case 1: return e.mass_amu;
            case 2: return e.covalent_radius;
            default: return e.electronegativity;
        }
    };
    for (int which = 0; which < 4; ++which) {
        double mean = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& [sym, n] : comp) {
            const double v = property(sym, which);
            mean += (n / total) * v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double mad = 0.0;
        for (const auto& [sym, n] : comp) {
            mad += (n / total) * std::abs(property(sym, which) - mean);
        }
        fp.values.insert(fp.values.end(), {mean, mad, lo, hi});
    }
    if (!cfg.normalization.empty()) {
        if (cfg.normalization.size() != fp.values.size()) {
            throw ConfigError("normalization length does not match fingerprint length");
        }
        for (std::size_t i = 0; i < fp.values.size(); ++i) {
            fp.values[i] *= cfg.normalization[i];
        }
    }
    return fp;
}

}  // namespace xtal

#endif
