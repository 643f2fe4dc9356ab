#pragma once

#include <optional>

#include "cayley/core.hpp"

namespace cayley {

/// Hyperbolic angle of a Lorentz boost.
struct Rapidity {
    double theta = 0.0;

    constexpr Rapidity() = default;
    explicit Rapidity(double t) : theta(t) {
        if (!std::isfinite(t)) throw GeometryError(ErrorCode::NonFinite, "rapidity must be finite");
    }
};

/// An element of a geometry's isometry group: x -> linear * x + translation.
///
/// The linear part must preserve the kind's quadratic form x^2 + eps*y^2 and
/// have unit determinant; the constructor checks both on a fixed probe set
/// and throws InvalidArgument otherwise. Constructors of the one-parameter
/// families also record their generating parameter.
class Isometry {
public:
    Isometry(GeometryKind kind, const Mat2& linear, const Vec2& translation,
             std::optional<double> generator = std::nullopt);

    GeometryKind kind() const noexcept { return kind_; }
    const Mat2& linear() const noexcept { return linear_; }
    const Vec2& translation() const noexcept { return translation_; }
    /// The rotation angle / Galilean velocity / rapidity the isometry was
    /// built from, when it came straight from a family constructor.
    std::optional<double> generator() const noexcept { return generator_; }

private:
    GeometryKind kind_;
    Mat2 linear_;
    Vec2 translation_;
    std::optional<double> generator_;
};

Isometry identity(GeometryKind kind);

/// Euclidean rotation [[cos, -sin], [sin, cos]].
Isometry rotation(double theta);

/// Galilean shear y' = y - u x, x' = x.
Isometry galilean_boost(double u);

/// Lorentz boost [[g, -g u], [-g u, g]] with g = 1/sqrt(1 - u^2).
/// Throws SuperluminalVelocity when |u| >= 1.
Isometry lorentz_boost_velocity(double u);

/// Hyperbolic rotation [[cosh, sinh], [sinh, cosh]]. The two boost forms are
/// related by lorentz_boost_rapidity(Rapidity(-atanh(u))) == lorentz_boost_velocity(u).
Isometry lorentz_boost_rapidity(Rapidity theta);

Isometry translate(const Vec2& t, GeometryKind kind);

/// g after h. Throws KindMismatch for isometries of different geometries.
Isometry compose(const Isometry& g, const Isometry& h);

Isometry inverse(const Isometry& g);

Vec2 apply(const Isometry& g, const Vec2& p);

/// x^2 + eps*y^2.
double invariant_form(GeometryKind kind, const Vec2& v);

/// Recovers the family parameter from the linear part alone: rotation angle
/// in (-pi, pi], Galilean velocity u, or rapidity.
double linear_parameter(const Isometry& g);

}  // namespace cayley
