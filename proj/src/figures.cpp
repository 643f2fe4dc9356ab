#include "cayley/figures.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cayley {

namespace {

double length(const Vec2& v) { return std::hypot(v.x(), v.y()); }

bool negligible_x(const Vec2& dir, const Tolerance& tol) {
    return std::abs(dir.x()) <= tol.abs + tol.rel * length(dir);
}

Line line_from(const Vec2& point, const Vec2& dir, const Tolerance& tol) {
    if (negligible_x(dir, tol)) return Line::vertical(point.x());
    const double slope = dir.y() / dir.x();
    return Line::sloped(slope, point.y() - slope * point.x());
}

}  // namespace

// ─── Line ───────────────────────────────────────────────────────────────────

Line Line::sloped(double slope, double intercept) {
    if (!std::isfinite(slope) || !std::isfinite(intercept)) {
        throw GeometryError(ErrorCode::NonFinite, "slope and intercept must be finite");
    }
    return Line{Sloped{slope, intercept}};
}

Line Line::vertical(double x0) {
    if (!std::isfinite(x0)) throw GeometryError(ErrorCode::NonFinite, "vertical line position must be finite");
    return Line{Vertical{x0}};
}

Line Line::through(const Vec2& a, const Vec2& b, const Tolerance& tol) {
    if (approx_eq(a, b, tol)) {
        throw GeometryError(ErrorCode::DegenerateFigure, "a line needs two distinct points");
    }
    return line_from(a, b - a, tol);
}

double Line::slope() const {
    if (is_vertical()) throw GeometryError(ErrorCode::VerticalLine, "vertical line has no slope");
    return std::get<Sloped>(rep_).slope;
}

double Line::intercept() const {
    if (is_vertical()) throw GeometryError(ErrorCode::VerticalLine, "vertical line has no intercept");
    return std::get<Sloped>(rep_).intercept;
}

double Line::vertical_x() const {
    if (!is_vertical()) throw GeometryError(ErrorCode::InvalidArgument, "line is not vertical");
    return std::get<Vertical>(rep_).x0;
}

Vec2 Line::anchor() const {
    if (is_vertical()) return {vertical_x(), 0.0};
    return {0.0, intercept()};
}

Vec2 Line::direction() const {
    if (is_vertical()) return {0.0, 1.0};
    return {1.0, slope()};
}

// ─── Circle / Polygon ───────────────────────────────────────────────────────

Circle::Circle(GeometryKind kind, const Vec2& center, double radius)
    : kind_(kind), center_(center), radius_(radius) {
    if (!std::isfinite(radius)) throw GeometryError(ErrorCode::NonFinite, "radius must be finite");
    if (radius < 0.0) throw GeometryError(ErrorCode::DegenerateRadius, "radius must be >= 0");
}

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw GeometryError(ErrorCode::TooFewVertices, "polygon needs >= 3 vertices");
}

// ─── Circle loci ────────────────────────────────────────────────────────────

std::vector<std::vector<Vec2>> circle_branches(const Circle& c, std::size_t n) {
    if (n < 2) throw GeometryError(ErrorCode::InvalidArgument, "circle locus needs n >= 2 samples");
    const double r = c.radius();
    const double cx = c.center().x();
    const double cy = c.center().y();
    if (r == 0.0 && c.kind() != GeometryKind::Euclidean) {
        throw GeometryError(ErrorCode::DegenerateRadius,
                            std::string(to_string(c.kind())) + " circle needs r > 0");
    }

    // m samples spread uniformly over [lo, hi], endpoints included
    auto spread = [](double lo, double hi, std::size_t m, std::size_t k) {
        return m == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(m - 1);
    };

    std::vector<std::vector<Vec2>> out;
    switch (c.kind()) {
        case GeometryKind::Euclidean: {
            std::vector<Vec2> loop;
            loop.reserve(n);
            for (std::size_t k = 0; k < n; ++k) {
                const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
                loop.emplace_back(cx + r * std::cos(t), cy + r * std::sin(t));
            }
            out.push_back(std::move(loop));
            break;
        }
        case GeometryKind::Galilean: {
            const std::size_t left_count = (n + 1) / 2;
            const std::size_t counts[2] = {left_count, n - left_count};
            const double xs[2] = {cx - r, cx + r};
            for (int side = 0; side < 2; ++side) {
                std::vector<Vec2> branch;
                for (std::size_t k = 0; k < counts[side]; ++k) {
                    branch.emplace_back(xs[side], spread(cy - r, cy + r, counts[side], k));
                }
                out.push_back(std::move(branch));
            }
            break;
        }
        case GeometryKind::Minkowski: {
            // right, left (spacelike offsets), upper, lower (timelike offsets)
            for (std::size_t b = 0; b < 4; ++b) {
                const std::size_t m = n / 4 + (b < n % 4 ? 1 : 0);
                std::vector<Vec2> branch;
                for (std::size_t k = 0; k < m; ++k) {
                    const double s = spread(-kHyperbolaWindow, kHyperbolaWindow, m, k);
                    const double ch = r * std::cosh(s);
                    const double sh = r * std::sinh(s);
                    switch (b) {
                        case 0: branch.emplace_back(cx + ch, cy + sh); break;
                        case 1: branch.emplace_back(cx - ch, cy + sh); break;
                        case 2: branch.emplace_back(cx + sh, cy + ch); break;
                        default: branch.emplace_back(cx + sh, cy - ch); break;
                    }
                }
                if (!branch.empty()) out.push_back(std::move(branch));
            }
            break;
        }
    }
    return out;
}

std::vector<Vec2> circle_locus(const Circle& c, std::size_t n) {
    std::vector<Vec2> out;
    for (auto& branch : circle_branches(c, n)) out.insert(out.end(), branch.begin(), branch.end());
    return out;
}

bool is_center(const Circle& c, const Vec2& p, const Tolerance& tol) {
    if (c.kind() != GeometryKind::Galilean) {
        throw GeometryError(ErrorCode::WrongGeometry,
                            "only Galilean circles have a line of centers; compare points instead");
    }
    return approx_eq(p.x(), c.center().x(), tol);
}

// ─── Lines under isometries ─────────────────────────────────────────────────

Line transform_line(const Isometry& g, const Line& l, const Tolerance& tol) {
    return line_from(apply(g, l.anchor()), g.linear() * l.direction(), tol);
}

bool parallel(const Line& l1, const Line& l2, const Tolerance& tol) {
    if (l1.is_vertical() || l2.is_vertical()) return l1.is_vertical() && l2.is_vertical();
    return approx_eq(l1.slope(), l2.slope(), tol);
}

Angle angle_lines_galilean(const Line& l1, const Line& l2) {
    if (l1.is_vertical() || l2.is_vertical()) {
        throw GeometryError(ErrorCode::VerticalLine, "Galilean angle needs non-vertical lines");
    }
    return angle_lines_galilean(l1.slope(), l2.slope());
}

bool collinear(const Vec2& a, const Vec2& b, const Vec2& c, const Tolerance& tol) {
    const Vec2 u = b - a;
    const Vec2 v = c - a;
    return std::abs(cross(u, v)) <= tol.abs + tol.rel * length(u) * length(v);
}

double collinear_ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d, const Tolerance& tol) {
    if (approx_eq(c, d, tol)) {
        throw GeometryError(ErrorCode::DegenerateDenominator, "segment CD has zero length");
    }
    if (!collinear(c, d, a, tol) || !collinear(c, d, b, tol)) {
        throw GeometryError(ErrorCode::NotCollinear, "A, B, C, D must lie on one line");
    }
    const Vec2 cd = d - c;
    return dot(b - a, cd) / dot(cd, cd);
}

double area(const Polygon& p) {
    const auto& v = p.vertices();
    // relative to the first vertex, so far-from-origin polygons keep their digits
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) twice += cross(v[i] - v[0], v[i + 1] - v[0]);
    return 0.5 * std::abs(twice);
}

Polygon transform_polygon(const Isometry& g, const Polygon& p) {
    std::vector<Vec2> out;
    out.reserve(p.vertices().size());
    for (const Vec2& v : p.vertices()) out.push_back(apply(g, v));
    return Polygon{std::move(out)};
}

}  // namespace cayley
