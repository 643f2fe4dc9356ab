#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's metric or transform code paths.

#include <array>
#include <cmath>

namespace oracle {

using Pair = std::array<double, 2>;
using Matrix = std::array<std::array<double, 2>, 2>;

inline double euclidean_inner(Pair a, Pair b) { return a[0] * b[0] + a[1] * b[1]; }
inline double galilean_inner(Pair a, Pair b) { return a[0] * b[0]; }
inline double minkowski_inner(Pair a, Pair b) { return a[0] * b[0] - a[1] * b[1]; }

/// Minkowski angle exactly as the textbook formula reads, with |a.b|.
inline double minkowski_angle_arccosh(Pair a, Pair b) {
    const double na = std::sqrt(std::abs(a[0] * a[0] - a[1] * a[1]));
    const double nb = std::sqrt(std::abs(b[0] * b[0] - b[1] * b[1]));
    return std::acosh(std::abs(minkowski_inner(a, b)) / (na * nb));
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Pair apply(const Matrix& m, Pair v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

/// Slope of the line through two points.
inline double slope(Pair p, Pair q) { return (q[1] - p[1]) / (q[0] - p[0]); }

/// Triangle area by Heron's formula.
inline double heron(Pair a, Pair b, Pair c) {
    auto len = [](Pair p, Pair q) { return std::hypot(p[0] - q[0], p[1] - q[1]); };
    const double x = len(a, b), y = len(b, c), z = len(c, a);
    const double s = 0.5 * (x + y + z);
    return std::sqrt(std::max(0.0, s * (s - x) * (s - y) * (s - z)));
}

inline double lorentz_gamma(double u) { return 1.0 / std::sqrt(1.0 - u * u); }

}  // namespace oracle
