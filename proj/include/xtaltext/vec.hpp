#ifndef XTALTEXT_VEC_HPP
#define XTALTEXT_VEC_HPP

#include <array>
#include <cmath>

namespace xtal {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// 3x3 matrix stored as rows.
struct Mat3 {
    std::array<Vec3, 3> rows;

    const Vec3& operator[](std::size_t i) const { return rows[i]; }
    Vec3& operator[](std::size_t i) { return rows[i]; }

    double det() const {
        const auto& m = rows;
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
};

}  // namespace xtal

#endif
