#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

// ─── Errors ─────────────────────────────────────────────────────────────────

enum class ErrorCode {
    NonFinite,
    InvalidTolerance,
    InvalidArgument,
    ZeroVector,
    NotOnVerticalLine,
    DegenerateVector,
    MixedCausalClass,
    WrongGeometry,
    SuperluminalVelocity,
    KindMismatch,
    DegenerateFigure,
    UnsupportedFigure,
    DegenerateRadius,
    VerticalLine,
    NotCollinear,
    DegenerateDenominator,
    TooFewVertices,
};

std::string_view to_string(ErrorCode code);

/// Raised whenever an operation's precondition is violated. The code names
/// the violated precondition; what() carries a human-readable detail.
class GeometryError : public std::domain_error {
public:
    GeometryError(ErrorCode code, const std::string& detail)
        : std::domain_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// ─── Tolerance ──────────────────────────────────────────────────────────────

struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    constexpr Tolerance() = default;
    Tolerance(double rel_, double abs_);
};

/// |a - b| <= abs + rel * max(|a|, |b|)
inline bool approx_eq(double a, double b, const Tolerance& tol = {}) {
    return std::abs(a - b) <= tol.abs + tol.rel * std::max(std::abs(a), std::abs(b));
}

inline bool approx_zero(double a, const Tolerance& tol = {}) { return std::abs(a) <= tol.abs; }

// ─── Geometry selector ──────────────────────────────────────────────────────

enum class GeometryKind { Euclidean, Galilean, Minkowski };

/// The signature parameter of the unified inner product x1*x2 + eps*y1*y2.
constexpr double epsilon(GeometryKind kind) noexcept {
    switch (kind) {
        case GeometryKind::Euclidean: return 1.0;
        case GeometryKind::Galilean: return 0.0;
        case GeometryKind::Minkowski: return -1.0;
    }
    return 1.0;
}

std::string_view to_string(GeometryKind kind);
/// Accepts the lowercase names "euclidean", "galilean", "minkowski".
GeometryKind parse_geometry_kind(std::string_view name);

enum class CausalClass { Spacelike, Timelike, Lightlike };

std::string_view to_string(CausalClass cls);

// ─── Vec2 ───────────────────────────────────────────────────────────────────

/// A point or displacement in the plane. In the Galilean and Minkowski
/// readings x is the time-like coordinate and y the spatial one.
class Vec2 {
public:
    constexpr Vec2() = default;
    Vec2(double x, double y) : x_(x), y_(y) {
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw GeometryError(ErrorCode::NonFinite, "Vec2 components must be finite");
        }
    }

    constexpr double x() const noexcept { return x_; }
    constexpr double y() const noexcept { return y_; }

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
    friend Vec2 operator*(double s, const Vec2& a) { return {s * a.x_, s * a.y_}; }
    Vec2 operator-() const { return {-x_, -y_}; }

    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

/// 2D cross product (z-component of the 3D cross product).
inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }
/// Plain coordinate dot product, independent of any geometry.
inline double dot(const Vec2& a, const Vec2& b) { return a.x() * b.x() + a.y() * b.y(); }

/// Componentwise approx_eq.
inline bool approx_eq(const Vec2& a, const Vec2& b, const Tolerance& tol = {}) {
    return approx_eq(a.x(), b.x(), tol) && approx_eq(a.y(), b.y(), tol);
}

// ─── Mat2 ───────────────────────────────────────────────────────────────────

/// Row-major 2x2 matrix acting on column vectors.
class Mat2 {
public:
    constexpr Mat2() = default;
    Mat2(double a11, double a12, double a21, double a22);

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    constexpr double a11() const noexcept { return a11_; }
    constexpr double a12() const noexcept { return a12_; }
    constexpr double a21() const noexcept { return a21_; }
    constexpr double a22() const noexcept { return a22_; }

    double det() const { return a11_ * a22_ - a12_ * a21_; }

    Vec2 operator*(const Vec2& v) const {
        return {a11_ * v.x() + a12_ * v.y(), a21_ * v.x() + a22_ * v.y()};
    }
    Mat2 operator*(const Mat2& m) const;

    /// Throws DegenerateFigure if the matrix is singular.
    Mat2 inverse() const;

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;

private:
    double a11_ = 1.0, a12_ = 0.0;
    double a21_ = 0.0, a22_ = 1.0;
};

/// Entrywise approx_eq.
bool approx_eq(const Mat2& a, const Mat2& b, const Tolerance& tol = {});

/// Largest absolute entrywise difference.
double max_abs_diff(const Mat2& a, const Mat2& b);

}  // namespace cayley
