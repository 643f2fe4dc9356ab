#include "cayley/klein.hpp"

#include <cmath>
#include <string>

#include "cayley/metric.hpp"

namespace cayley {

Figure::Figure(std::vector<Vec2> points) : points_(std::move(points)) {
    if (points_.empty()) throw GeometryError(ErrorCode::DegenerateFigure, "figure has no points");
}

Vec2 act(const KleinGeometry& geom, const Isometry& g, const Vec2& p) {
    if (g.kind() != geom.kind) {
        throw GeometryError(ErrorCode::KindMismatch,
                            std::string(to_string(g.kind())) + " isometry acting in " +
                                std::string(to_string(geom.kind)) + " geometry");
    }
    return apply(g, p);
}

Figure act(const KleinGeometry& geom, const Isometry& g, const Figure& f) {
    std::vector<Vec2> out;
    out.reserve(f.size());
    for (const Vec2& p : f.points()) out.push_back(act(geom, g, p));
    return Figure{std::move(out)};
}

std::vector<double> congruence_invariants(const KleinGeometry& geom, const Figure& f,
                                          const Tolerance& tol) {
    if (f.size() < 2) {
        throw GeometryError(ErrorCode::DegenerateFigure, "congruence invariants need at least 2 points");
    }
    const auto& pts = f.points();
    std::vector<double> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Vec2& a = pts[i];
            const Vec2& b = pts[j];
            switch (geom.kind) {
                case GeometryKind::Euclidean:
                    out.push_back(distance(geom.kind, a, b));
                    break;
                case GeometryKind::Galilean:
                    out.push_back(distance(geom.kind, a, b));
                    if (approx_eq(a.x(), b.x(), tol)) out.push_back(special_distance(a, b, tol));
                    break;
                case GeometryKind::Minkowski: {
                    const Vec2 d = b - a;
                    out.push_back(std::abs((d.x() - d.y()) * (d.x() + d.y())));
                    double tag = 0.0;
                    if (d != Vec2{}) {
                        const CausalClass cls = classify(d, tol);
                        tag = cls == CausalClass::Spacelike ? 1.0 : cls == CausalClass::Timelike ? -1.0 : 0.0;
                    }
                    out.push_back(tag);
                    break;
                }
            }
        }
    }
    return out;
}

bool invariants_match(const KleinGeometry& geom, const Figure& f, const Figure& h,
                      const Tolerance& tol) {
    if (f.size() != h.size()) return false;
    const auto a = congruence_invariants(geom, f, tol);
    const auto b = congruence_invariants(geom, h, tol);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!approx_eq(a[i], b[i], tol)) return false;
    }
    return true;
}

namespace {

double figure_scale(const Figure& f, const Figure& h) {
    double s = 0.0;
    for (const auto* fig : {&f, &h}) {
        for (const Vec2& p : fig->points()) s = std::max({s, std::abs(p.x()), std::abs(p.y())});
    }
    return s;
}

// Linear part solved from the edges P_i - P_0 of f and h. Returns nullopt
// when the edge data already rule out a witness.
std::optional<Mat2> solve_linear(GeometryKind kind, const Figure& f, const Figure& h,
                                 const Tolerance& tol, double scale) {
    const auto& fp = f.points();
    const auto& hp = h.points();
    const double floor = tol.abs + tol.rel * scale;

    switch (kind) {
        case GeometryKind::Euclidean: {
            // the longest edge fixes the angle best
            std::size_t best = 0;
            double best_len = floor;
            for (std::size_t i = 1; i < fp.size(); ++i) {
                const double len = std::hypot((fp[i] - fp[0]).x(), (fp[i] - fp[0]).y());
                if (len > best_len) {
                    best = i;
                    best_len = len;
                }
            }
            if (best == 0) return Mat2::identity();
            const Vec2 e = fp[best] - fp[0];
            const Vec2 k = hp[best] - hp[0];
            return rotation(std::atan2(cross(e, k), dot(e, k))).linear();
        }
        case GeometryKind::Galilean: {
            std::size_t best = 0;
            double best_dx = floor;
            for (std::size_t i = 1; i < fp.size(); ++i) {
                const double dx = std::abs((fp[i] - fp[0]).x());
                if (dx > best_dx) {
                    best = i;
                    best_dx = dx;
                }
            }
            // no edge with a time extent: every boost fixes the edges, pick u = 0
            if (best == 0) return Mat2::identity();
            const Vec2 e = fp[best] - fp[0];
            const Vec2 k = hp[best] - hp[0];
            return galilean_boost((e.y() - k.y()) / e.x()).linear();
        }
        case GeometryKind::Minkowski: {
            for (std::size_t i = 1; i < fp.size(); ++i) {
                const Vec2 e = fp[i] - fp[0];
                const Vec2 k = hp[i] - hp[0];
                const bool ez = e == Vec2{};
                const bool kz = k == Vec2{};
                if (ez != kz) return std::nullopt;
                if (!ez && classify(e, tol) != classify(k, tol)) return std::nullopt;
            }
            // Light-cone coordinates p = x + y, m = x - y diagonalize the
            // boost: p' = e^theta p, m' = e^-theta m. Solve from the largest one.
            double best = floor;
            double theta = 0.0;
            bool found = false;
            for (std::size_t i = 1; i < fp.size(); ++i) {
                const Vec2 e = fp[i] - fp[0];
                const Vec2 k = hp[i] - hp[0];
                const double ep = e.x() + e.y(), em = e.x() - e.y();
                const double kp = k.x() + k.y(), km = k.x() - k.y();
                if (std::abs(ep) > best) {
                    if (ep * kp <= 0.0) return std::nullopt;
                    best = std::abs(ep);
                    theta = std::log(kp / ep);
                    found = true;
                }
                if (std::abs(em) > best) {
                    if (em * km <= 0.0) return std::nullopt;
                    best = std::abs(em);
                    theta = -std::log(km / em);
                    found = true;
                }
            }
            if (!found) return Mat2::identity();
            return lorentz_boost_rapidity(Rapidity{theta}).linear();
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Isometry> find_congruence(const KleinGeometry& geom, const Figure& f, const Figure& h,
                                        const Tolerance& tol) {
    if (f.size() != h.size() || (f.size() != 2 && f.size() != 3)) {
        throw GeometryError(ErrorCode::UnsupportedFigure,
                            "witness search supports segments and triangles with matching point counts");
    }
    const double scale = figure_scale(f, h);
    const auto linear = solve_linear(geom.kind, f, h, tol, scale);
    if (!linear) return std::nullopt;

    const Vec2 t = h.points()[0] - (*linear) * f.points()[0];
    Isometry g{geom.kind, *linear, t};

    const double limit = tol.abs + tol.rel * std::max(1.0, scale);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Vec2 diff = act(geom, g, f.points()[i]) - h.points()[i];
        if (std::abs(diff.x()) > limit || std::abs(diff.y()) > limit) return std::nullopt;
    }
    return g;
}

// ─── Cayley-Klein taxonomy ──────────────────────────────────────────────────

std::string_view to_string(MeasureKind m) {
    switch (m) {
        case MeasureKind::Elliptic: return "elliptic";
        case MeasureKind::Parabolic: return "parabolic";
        case MeasureKind::Hyperbolic: return "hyperbolic";
    }
    return "elliptic";
}

const CayleyKleinTable& cayley_klein_table() {
    // rows: angle measure; columns: length measure
    static const CayleyKleinTable table{{
        {{{"Ελλειπτική γεωμετρία", "Elliptic geometry"},
          {"Ευκλείδεια γεωμετρία", "Euclidean geometry"},
          {"Υπερβολική γεωμετρία", "Hyperbolic geometry"}}},
        {{{"συν-Ευκλείδεια γεωμετρία", "co-Euclidean geometry"},
          {"Γεωμετρία Galileo", "Galileo geometry"},
          {"συν-Minkowski γεωμετρία", "co-Minkowski geometry"}}},
        {{{"συν-υπερβολική γεωμετρία", "co-hyperbolic geometry"},
          {"Γεωμετρία Minkowski", "Minkowski geometry"},
          {"Διπλή υπερβολική γεωμετρία", "doubly hyperbolic geometry"}}},
    }};
    return table;
}

const GeometryName& table_cell(MeasureKind angle, MeasureKind length) {
    return cayley_klein_table()[static_cast<std::size_t>(angle)][static_cast<std::size_t>(length)];
}

std::optional<GeometryKind> implemented_kind(MeasureKind length, MeasureKind angle) {
    if (length != MeasureKind::Parabolic) return std::nullopt;
    switch (angle) {
        case MeasureKind::Elliptic: return GeometryKind::Euclidean;
        case MeasureKind::Parabolic: return GeometryKind::Galilean;
        case MeasureKind::Hyperbolic: return GeometryKind::Minkowski;
    }
    return std::nullopt;
}

}  // namespace cayley
