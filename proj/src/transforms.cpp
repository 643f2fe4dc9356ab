#include "cayley/transforms.hpp"

#include <array>
#include <cmath>
#include <string>

namespace cayley {

namespace {

void check_linear_part(GeometryKind kind, const Mat2& m) {
    // Probe tolerance scales with the magnitudes involved: boosts with large
    // rapidity have large entries and x^2 - y^2 cancels accordingly.
    constexpr double kProbeRel = 1e-9;
    const std::array<Vec2, 4> probes{Vec2{1.0, 0.0}, Vec2{0.0, 1.0}, Vec2{1.0, 1.0}, Vec2{1.0, -2.0}};
    for (const Vec2& v : probes) {
        const Vec2 w = m * v;
        const double before = invariant_form(kind, v);
        const double after = invariant_form(kind, w);
        const double scale = 1.0 + dot(v, v) + dot(w, w);
        if (std::abs(after - before) > kProbeRel * scale) {
            throw GeometryError(ErrorCode::InvalidArgument,
                                "linear part does not preserve the " + std::string(to_string(kind)) +
                                    " quadratic form");
        }
    }
    const double scale = 1.0 + std::abs(m.a11() * m.a22()) + std::abs(m.a12() * m.a21());
    if (std::abs(m.det() - 1.0) > kProbeRel * scale) {
        throw GeometryError(ErrorCode::InvalidArgument, "linear part must have unit determinant");
    }
}

}  // namespace

Isometry::Isometry(GeometryKind kind, const Mat2& linear, const Vec2& translation,
                   std::optional<double> generator)
    : kind_(kind), linear_(linear), translation_(translation), generator_(generator) {
    check_linear_part(kind, linear);
}

Isometry identity(GeometryKind kind) { return {kind, Mat2::identity(), Vec2{}, 0.0}; }

Isometry rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {GeometryKind::Euclidean, Mat2{c, -s, s, c}, Vec2{}, theta};
}

Isometry galilean_boost(double u) {
    return {GeometryKind::Galilean, Mat2{1.0, 0.0, -u, 1.0}, Vec2{}, u};
}

Isometry lorentz_boost_velocity(double u) {
    if (std::isnan(u)) throw GeometryError(ErrorCode::NonFinite, "boost velocity must be finite");
    if (std::abs(u) >= 1.0) {
        throw GeometryError(ErrorCode::SuperluminalVelocity, "boost velocity needs |u| < 1 (c = 1)");
    }
    const double gamma = 1.0 / std::sqrt((1.0 - u) * (1.0 + u));
    const double gu = gamma * u;
    return {GeometryKind::Minkowski, Mat2{gamma, -gu, -gu, gamma}, Vec2{}, -std::atanh(u)};
}

Isometry lorentz_boost_rapidity(Rapidity theta) {
    const double c = std::cosh(theta.theta);
    const double s = std::sinh(theta.theta);
    return {GeometryKind::Minkowski, Mat2{c, s, s, c}, Vec2{}, theta.theta};
}

Isometry translate(const Vec2& t, GeometryKind kind) {
    return {kind, Mat2::identity(), t};
}

Isometry compose(const Isometry& g, const Isometry& h) {
    if (g.kind() != h.kind()) {
        throw GeometryError(ErrorCode::KindMismatch,
                            "cannot compose " + std::string(to_string(g.kind())) + " and " +
                                std::string(to_string(h.kind())) + " isometries");
    }
    return {g.kind(), g.linear() * h.linear(), g.linear() * h.translation() + g.translation()};
}

Isometry inverse(const Isometry& g) {
    const Mat2 inv = g.linear().inverse();
    std::optional<double> generator;
    if (g.generator() && g.translation() == Vec2{}) generator = -*g.generator();
    return {g.kind(), inv, -(inv * g.translation()), generator};
}

Vec2 apply(const Isometry& g, const Vec2& p) { return g.linear() * p + g.translation(); }

double invariant_form(GeometryKind kind, const Vec2& v) {
    return v.x() * v.x() + (epsilon(kind) * v.y()) * v.y();
}

double linear_parameter(const Isometry& g) {
    const Mat2& m = g.linear();
    switch (g.kind()) {
        case GeometryKind::Euclidean: return std::atan2(m.a21(), m.a11());
        case GeometryKind::Galilean: return -m.a21();
        case GeometryKind::Minkowski: return std::asinh(m.a21());
    }
    return 0.0;
}

}  // namespace cayley
