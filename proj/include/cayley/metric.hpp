#pragma once

#include "cayley/core.hpp"

namespace cayley {

/// An angle in the geometry's own measure: radians in [0, pi] for Euclidean,
/// a nonnegative rapidity for Minkowski, a signed slope difference for Galilean.
struct Angle {
    double value = 0.0;
};

/// Unified inner product x1*x2 + eps*y1*y2.
double inner(GeometryKind kind, const Vec2& a, const Vec2& b);

/// Euclidean: sqrt(x^2 + y^2). Galilean: |x|. Minkowski: sqrt(|x^2 - y^2|),
/// zero on the light cone.
double norm(GeometryKind kind, const Vec2& a, const Tolerance& tol = {});

/// Causal class of a nonzero vector under the Minkowski form x^2 - y^2.
/// The lightlike band is scaled by x^2 + y^2.
CausalClass classify(const Vec2& a, const Tolerance& tol = {});

/// Euclidean and Minkowski distances are nonnegative. The Galilean distance
/// is the signed projection x_B - x_A, so distance(B, A) == -distance(A, B).
double distance(GeometryKind kind, const Vec2& a, const Vec2& b);

/// |distance|, for callers wanting a metric-like Galilean value.
double abs_distance(GeometryKind kind, const Vec2& a, const Vec2& b);

/// Galilean special distance y_B - y_A; only defined for points on a common
/// vertical line. Throws NotOnVerticalLine otherwise.
double special_distance(const Vec2& a, const Vec2& b, const Tolerance& tol = {});

/// In Galilean geometry two points coincide only when both the distance and
/// the special distance vanish.
bool points_coincide(GeometryKind kind, const Vec2& a, const Vec2& b, const Tolerance& tol = {});

/// Angle between two vectors. Euclidean: arccos of the normalized dot
/// product. Minkowski: the hyperbolic angle between two vectors of the same
/// causal class. Not defined for Galilean vectors (use angle_lines_galilean).
Angle angle_vectors(GeometryKind kind, const Vec2& a, const Vec2& b, const Tolerance& tol = {});

/// Galilean angle between lines with slopes lambda1, lambda2: lambda2 - lambda1.
Angle angle_lines_galilean(double lambda1, double lambda2);

bool perpendicular(GeometryKind kind, const Vec2& a, const Vec2& b, const Tolerance& tol = {});

}  // namespace cayley
