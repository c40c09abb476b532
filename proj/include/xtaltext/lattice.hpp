#ifndef XTALTEXT_LATTICE_HPP
#define XTALTEXT_LATTICE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "xtaltext/errors.hpp"
#include "xtaltext/vec.hpp"

namespace xtal {

/// Cell lengths in angstrom, angles in degrees.
struct LatticeParameters {
    double a, b, c;
    double alpha, beta, gamma;

    void validate() const {
        if (!(a > 0 && b > 0 && c > 0)) {
            throw InvalidLatticeError("lattice lengths must be positive");
        }
        for (double ang : {alpha, beta, gamma}) {
            if (!(ang > 0 && ang < 180)) {
                throw InvalidLatticeError("lattice angles must lie in (0, 180)");
            }
        }
    }
};

inline double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / std::numbers::pi; }

/// Lattice matrix in the standard orientation: a along x, b in the x-y plane.
inline Mat3 lattice_matrix_from_parameters(const LatticeParameters& p) {
    p.validate();
    const double ca = std::cos(deg_to_rad(p.alpha));
    const double cb = std::cos(deg_to_rad(p.beta));
    const double cg = std::cos(deg_to_rad(p.gamma));
    const double sg = std::sin(deg_to_rad(p.gamma));
    const double cy = (ca - cb * cg) / sg;
    const double czsq = 1.0 - cb * cb - cy * cy;
    if (czsq <= 0.0) {
        throw InvalidLatticeError("angle combination yields a degenerate cell");
    }
    Mat3 m{{Vec3{p.a, 0.0, 0.0},
            Vec3{p.b * cg, p.b * sg, 0.0},
            Vec3{p.c * cb, p.c * cy, p.c * std::sqrt(czsq)}}};
    return m;
}

inline LatticeParameters lattice_parameters_from_matrix(const Mat3& m) {
    if (m.det() <= 0.0) {
        throw InvalidLatticeError("lattice matrix must be right-handed");
    }
    const double a = norm(m[0]), b = norm(m[1]), c = norm(m[2]);
    if (a == 0.0 || b == 0.0 || c == 0.0) {
        throw InvalidLatticeError("lattice matrix has a zero-length row");
    }
    LatticeParameters p{a, b, c,
                        rad_to_deg(std::acos(dot(m[1], m[2]) / (b * c))),
                        rad_to_deg(std::acos(dot(m[0], m[2]) / (a * c))),
                        rad_to_deg(std::acos(dot(m[0], m[1]) / (a * b)))};
    p.validate();
    return p;
}

inline Vec3 frac_to_cart(const Mat3& m, const Vec3& f) {
    return f[0] * m[0] + f[1] * m[1] + f[2] * m[2];
}

/// Snap tolerance keeping text-quantized coordinates stable: wrapped values
/// within 1e-6 of 1.0 become 0.0.
inline constexpr double kWrapSnap = 1e-6;

inline Vec3 wrap_fractional(const Vec3& f) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        double w = f[i] - std::floor(f[i]);
        if (w >= 1.0 - kWrapSnap) w = 0.0;
        out[i] = w;
    }
    return out;
}

/// Minimum-image distance between two fractional points. The default search
/// radius of 1 is exact for near-orthogonal cells; highly skewed cells can
/// pass a larger radius.
inline double min_image_distance(const Mat3& m, const Vec3& f1, const Vec3& f2,
                                 int radius = 1) {
    const Vec3 d = wrap_fractional(f1 - f2);
    double best = std::numeric_limits<double>::infinity();
    for (int i = -radius; i <= radius; ++i) {
        for (int j = -radius; j <= radius; ++j) {
            for (int k = -radius; k <= radius; ++k) {
                const Vec3 shifted{d[0] + i, d[1] + j, d[2] + k};
                best = std::min(best, norm(frac_to_cart(m, shifted)));
            }
        }
    }
    return best;
}

/// Fractional-space (unit-metric) minimum-image distance; used for symmetry
/// tolerance checks where the physical cell shape should not matter.
inline double min_image_frac_distance(const Vec3& f1, const Vec3& f2) {
    double sq = 0.0;
    for (int i = 0; i < 3; ++i) {
        double d = f1[i] - f2[i];
        d -= std::round(d);
        sq += d * d;
    }
    return std::sqrt(sq);
}

}  // namespace xtal

#endif
