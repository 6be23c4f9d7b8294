#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace cmct {

/// Point or direction in R^4. Surface points live on the unit 3-sphere.
struct Vec4 {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    Vec4() = default;
    Vec4(double x1, double x2, double x3, double x4) : c{x1, x2, x3, x4} {}

    double& operator[](std::size_t i) { return c[i]; }
    double operator[](std::size_t i) const { return c[i]; }

    Vec4& operator+=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec4& operator-=(const Vec4& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec4& operator*=(double s) {
        for (double& x : c) x *= s;
        return *this;
    }
};

inline Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
inline Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
inline Vec4 operator*(Vec4 a, double s) { return a *= s; }
inline Vec4 operator*(double s, Vec4 a) { return a *= s; }
inline Vec4 operator-(const Vec4& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm_squared(const Vec4& a) { return dot(a, a); }
inline double norm(const Vec4& a) { return std::sqrt(norm_squared(a)); }

inline Vec4 normalized(const Vec4& a) {
    const double n = norm(a);
    return {a[0] / n, a[1] / n, a[2] / n, a[3] / n};
}

inline double det3(double a0, double a1, double a2,  //
                   double b0, double b1, double b2,  //
                   double c0, double c1, double c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

/// Generalized cross product: the unique d with dot(d, x) = det[a; b; c; x] for all x.
/// Orthogonal to a, b and c.
inline Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
    const double m0 = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
    const double m1 = det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
    const double m2 = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
    const double m3 = det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
    return {-m0, m1, -m2, m3};
}

}  // namespace cmct
