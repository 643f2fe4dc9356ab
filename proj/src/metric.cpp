#include "cayley/metric.hpp"

#include <cmath>

namespace cayley {

namespace {

// x^2 - y^2 evaluated without the cancellation of the expanded form.
double minkowski_form(const Vec2& a) { return (a.x() - a.y()) * (a.x() + a.y()); }

double coordinate_length(const Vec2& a) { return std::hypot(a.x(), a.y()); }

}  // namespace

double inner(GeometryKind kind, const Vec2& a, const Vec2& b) {
    // eps * y1 is formed first: it is exact for eps in {1, 0, -1}, so the
    // result matches the per-geometry formulas bit for bit.
    return a.x() * b.x() + (epsilon(kind) * a.y()) * b.y();
}

double norm(GeometryKind kind, const Vec2& a, const Tolerance& tol) {
    switch (kind) {
        case GeometryKind::Euclidean: return coordinate_length(a);
        case GeometryKind::Galilean: return std::abs(a.x());
        case GeometryKind::Minkowski:
            if (a.x() == 0.0 && a.y() == 0.0) return 0.0;
            if (classify(a, tol) == CausalClass::Lightlike) return 0.0;
            return std::sqrt(std::abs(minkowski_form(a)));
    }
    return 0.0;
}

CausalClass classify(const Vec2& a, const Tolerance& tol) {
    if (a.x() == 0.0 && a.y() == 0.0) {
        throw GeometryError(ErrorCode::ZeroVector, "causal class is defined for nonzero vectors only");
    }
    const double q = minkowski_form(a);
    const double scale = a.x() * a.x() + a.y() * a.y();
    if (std::abs(q) <= tol.abs + tol.rel * scale) return CausalClass::Lightlike;
    return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

double distance(GeometryKind kind, const Vec2& a, const Vec2& b) {
    switch (kind) {
        case GeometryKind::Euclidean: return coordinate_length(a - b);
        case GeometryKind::Galilean: return b.x() - a.x();
        case GeometryKind::Minkowski: return std::sqrt(std::abs(minkowski_form(a - b)));
    }
    return 0.0;
}

double abs_distance(GeometryKind kind, const Vec2& a, const Vec2& b) {
    return std::abs(distance(kind, a, b));
}

double special_distance(const Vec2& a, const Vec2& b, const Tolerance& tol) {
    if (!approx_eq(a.x(), b.x(), tol)) {
        throw GeometryError(ErrorCode::NotOnVerticalLine,
                            "special distance needs a zero Galilean distance (equal x)");
    }
    return b.y() - a.y();
}

bool points_coincide(GeometryKind kind, const Vec2& a, const Vec2& b, const Tolerance& tol) {
    if (kind != GeometryKind::Galilean) return approx_eq(a, b, tol);
    // zero distance first; only then is the special distance defined
    if (!approx_eq(a.x(), b.x(), tol)) return false;
    const double delta = special_distance(a, b, tol);
    return std::abs(delta) <= tol.abs + tol.rel * std::max(std::abs(a.y()), std::abs(b.y()));
}

Angle angle_vectors(GeometryKind kind, const Vec2& a, const Vec2& b, const Tolerance& tol) {
    switch (kind) {
        case GeometryKind::Galilean:
            throw GeometryError(ErrorCode::WrongGeometry,
                                "Galilean angles are defined between lines (slopes), not vectors");
        case GeometryKind::Euclidean: {
            const double na = coordinate_length(a);
            const double nb = coordinate_length(b);
            if (na <= tol.abs || nb <= tol.abs) {
                throw GeometryError(ErrorCode::DegenerateVector, "angle with a zero vector");
            }
            const double ratio = std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
            return {std::acos(ratio)};
        }
        case GeometryKind::Minkowski: {
            if ((a.x() == 0.0 && a.y() == 0.0) || (b.x() == 0.0 && b.y() == 0.0)) {
                throw GeometryError(ErrorCode::DegenerateVector, "angle with a zero vector");
            }
            const CausalClass ca = classify(a, tol);
            const CausalClass cb = classify(b, tol);
            if (ca == CausalClass::Lightlike || cb == CausalClass::Lightlike) {
                throw GeometryError(ErrorCode::DegenerateVector, "angle with a lightlike vector");
            }
            if (ca != cb) {
                throw GeometryError(ErrorCode::MixedCausalClass,
                                    "vectors of different causal class have no real angle");
            }
            // For same-class pairs (a.b)^2 - |a|^2 |b|^2 = cross(a, b)^2, so
            // sinh(phi) = |cross| / (|a| |b|) is the same angle as
            // arccosh(|a.b| / (|a| |b|)) without arccosh's loss of accuracy near 1.
            const double scale = std::sqrt(std::abs(minkowski_form(a))) *
                                 std::sqrt(std::abs(minkowski_form(b)));
            return {std::asinh(std::abs(cross(a, b)) / scale)};
        }
    }
    return {};
}

Angle angle_lines_galilean(double lambda1, double lambda2) { return {lambda2 - lambda1}; }

bool perpendicular(GeometryKind kind, const Vec2& a, const Vec2& b, const Tolerance& tol) {
    const double scale = coordinate_length(a) * coordinate_length(b);
    return std::abs(inner(kind, a, b)) <= tol.abs + tol.rel * scale;
}

}  // namespace cayley
