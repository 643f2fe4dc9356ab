#pragma once

#include <variant>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/metric.hpp"
#include "cayley/transforms.hpp"

namespace cayley {

/// A line y = slope * x + intercept, or a vertical line x = x0.
class Line {
public:
    static Line sloped(double slope, double intercept);
    static Line vertical(double x0);
    /// Line through two distinct points; vertical when the x-extent is
    /// negligible against the segment length. Throws DegenerateFigure if a ≈ b.
    static Line through(const Vec2& a, const Vec2& b, const Tolerance& tol = {});

    bool is_vertical() const noexcept { return std::holds_alternative<Vertical>(rep_); }
    /// Throw VerticalLine for vertical lines.
    double slope() const;
    double intercept() const;
    /// Throws InvalidArgument for non-vertical lines.
    double vertical_x() const;

    /// Some point on the line and a direction vector along it.
    Vec2 anchor() const;
    Vec2 direction() const;

private:
    struct Sloped {
        double slope;
        double intercept;
    };
    struct Vertical {
        double x0;
    };
    explicit Line(std::variant<Sloped, Vertical> rep) : rep_(rep) {}

    std::variant<Sloped, Vertical> rep_;
};

/// Circle of `kind`: the points at constant |distance| from the center.
/// For Galilean geometry this is the pair of vertical lines x = cx ± r.
class Circle {
public:
    Circle(GeometryKind kind, const Vec2& center, double radius);

    GeometryKind kind() const noexcept { return kind_; }
    const Vec2& center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }

private:
    GeometryKind kind_;
    Vec2 center_;
    double radius_;
};

class Polygon {
public:
    /// Throws TooFewVertices below 3 vertices.
    explicit Polygon(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const noexcept { return vertices_; }

private:
    std::vector<Vec2> vertices_;
};

/// Parameter window [-kHyperbolaWindow, kHyperbolaWindow] used to sample
/// each Minkowski hyperbola branch.
inline constexpr double kHyperbolaWindow = 2.0;

/// Sample points grouped by connected branch: one closed loop (Euclidean),
/// the left and right vertical lines (Galilean), or the right, left, upper
/// and lower hyperbola branches (Minkowski). n points in total, n >= 2.
/// Throws DegenerateRadius for r = 0 in Galilean or Minkowski geometry.
std::vector<std::vector<Vec2>> circle_branches(const Circle& c, std::size_t n);

/// circle_branches flattened.
std::vector<Vec2> circle_locus(const Circle& c, std::size_t n);

/// Galilean circles have infinitely many centers: every point on the
/// mid-parallel x = cx. Throws WrongGeometry for other kinds.
bool is_center(const Circle& c, const Vec2& p, const Tolerance& tol = {});

/// Image of a line under an isometry of any kind (all are affine).
Line transform_line(const Isometry& g, const Line& l, const Tolerance& tol = {});

bool parallel(const Line& l1, const Line& l2, const Tolerance& tol = {});

/// Galilean angle between two non-vertical lines; throws VerticalLine otherwise.
Angle angle_lines_galilean(const Line& l1, const Line& l2);

bool collinear(const Vec2& a, const Vec2& b, const Vec2& c, const Tolerance& tol = {});

/// Signed ratio AB / CD of directed lengths along a common line.
/// Throws DegenerateDenominator if C ≈ D and NotCollinear if the four points
/// are not on one line.
double collinear_ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                       const Tolerance& tol = {});

/// Absolute shoelace area.
double area(const Polygon& p);

Polygon transform_polygon(const Isometry& g, const Polygon& p);

}  // namespace cayley
