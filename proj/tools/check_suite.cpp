#include "check_suite.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "cayley/figures.hpp"
#include "cayley/klein.hpp"
#include "cayley/metric.hpp"
#include "sampler.hpp"

namespace cayley::cli {

namespace {

double rel_err(double a, double b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

double rel_err(const Vec2& a, const Vec2& b) { return std::max(rel_err(a.x(), b.x()), rel_err(a.y(), b.y())); }

double rel_err(const Isometry& g, const Isometry& h) {
    const Mat2& a = g.linear();
    const Mat2& b = h.linear();
    return std::max({rel_err(a.a11(), b.a11()), rel_err(a.a12(), b.a12()), rel_err(a.a21(), b.a21()),
                     rel_err(a.a22(), b.a22()), rel_err(g.translation(), h.translation())});
}

// Angle difference folded into (-pi, pi].
double wrapped(double a) { return std::remainder(a, 2.0 * std::numbers::pi); }

class Suite {
public:
    Suite(std::size_t samples, std::uint64_t seed, const Tolerance& tol)
        : samples_(samples), rng_(seed), tol_(tol) {}

    void property(GeometryKind kind, std::string name, const std::function<double()>& trial) {
        double worst = 0.0;
        for (std::size_t i = 0; i < samples_; ++i) worst = std::max(worst, trial());
        results_.push_back({kind, std::move(name), worst, worst <= tol_.rel});
    }

    void discrete(GeometryKind kind, std::string name, const std::function<bool()>& trial) {
        std::size_t failures = 0;
        for (std::size_t i = 0; i < samples_; ++i) failures += trial() ? 0 : 1;
        results_.push_back({kind, std::move(name), static_cast<double>(failures), failures == 0});
    }

    Sampler& rng() { return rng_; }
    std::vector<PropertyResult> take() { return std::move(results_); }

private:
    std::size_t samples_;
    Sampler rng_;
    Tolerance tol_;
    std::vector<PropertyResult> results_;
};

void common_properties(Suite& s, GeometryKind kind) {
    Sampler& rng = s.rng();
    const KleinGeometry geom{kind};

    s.property(kind, "quadratic-form-invariance", [&] {
        const Vec2 v = rng.vec(-10.0, 10.0);
        const Isometry g = rng.linear_element(kind);
        const double q = invariant_form(kind, v);
        return std::abs(invariant_form(kind, g.linear() * v) - q) / (1.0 + std::abs(q));
    });
    s.property(kind, "group-associativity", [&] {
        const Isometry a = rng.isometry(kind), b = rng.isometry(kind), c = rng.isometry(kind);
        return rel_err(compose(compose(a, b), c), compose(a, compose(b, c)));
    });
    s.property(kind, "group-identity", [&] {
        const Isometry g = rng.isometry(kind);
        const Isometry e = geom.identity();
        return std::max(rel_err(compose(g, e), g), rel_err(compose(e, g), g));
    });
    s.property(kind, "group-inverse", [&] {
        const Isometry g = rng.isometry(kind);
        const Isometry e = geom.identity();
        return std::max(rel_err(compose(g, inverse(g)), e), rel_err(compose(inverse(g), g), e));
    });
    s.property(kind, "parameter-additivity", [&] {
        const double a = rng.parameter(kind), b = rng.parameter(kind);
        const Isometry composed = compose(Sampler::linear_element(kind, a), Sampler::linear_element(kind, b));
        const double recovered = linear_parameter(composed);
        const double param_err = kind == GeometryKind::Euclidean ? std::abs(wrapped(recovered - (a + b)))
                                                                 : rel_err(recovered, a + b);
        return std::max(rel_err(composed, Sampler::linear_element(kind, a + b)), param_err);
    });
    s.property(kind, "action-identity", [&] {
        const Vec2 p = rng.vec(-10.0, 10.0);
        return rel_err(act(geom, geom.identity(), p), p);
    });
    s.property(kind, "action-compatibility", [&] {
        const Isometry g1 = rng.isometry(kind), g2 = rng.isometry(kind);
        const Vec2 p = rng.vec(-10.0, 10.0);
        return rel_err(act(geom, g1, act(geom, g2, p)), act(geom, compose(g1, g2), p));
    });
    s.property(kind, "distance-preservation", [&] {
        const Isometry g = rng.isometry(kind);
        const Vec2 a = rng.vec(-10.0, 10.0), b = rng.vec(-10.0, 10.0);
        if (kind == GeometryKind::Minkowski) {
            // compare the squared interval; its square root loses half the
            // digits near the light cone
            const Vec2 d = b - a, e = apply(g, b) - apply(g, a);
            return std::abs(invariant_form(kind, d) - invariant_form(kind, e)) / (1.0 + dot(d, d) + dot(e, e));
        }
        return rel_err(distance(kind, a, b), distance(kind, apply(g, a), apply(g, b)));
    });
}

void galilean_properties(Suite& s) {
    constexpr GeometryKind kind = GeometryKind::Galilean;
    Sampler& rng = s.rng();

    s.property(kind, "special-distance-preservation", [&] {
        const Isometry g = rng.isometry(kind);
        const double x = rng.uniform(-10.0, 10.0);
        const Vec2 a{x, rng.uniform(-10.0, 10.0)}, b{x, rng.uniform(-10.0, 10.0)};
        return rel_err(special_distance(a, b), special_distance(apply(g, a), apply(g, b)));
    });
    s.property(kind, "collinear-ratio-preservation", [&] {
        const Isometry g = rng.isometry(kind);
        const Vec2 base = rng.vec(-10.0, 10.0), dir = rng.vec(-1.0, 1.0);
        if (std::hypot(dir.x(), dir.y()) < 1e-2) return 0.0;
        double t[4];
        for (double& ti : t) ti = rng.uniform(-5.0, 5.0);
        if (std::abs(t[2] - t[3]) < 1e-2) return 0.0;
        Vec2 p[4];
        for (int i = 0; i < 4; ++i) p[i] = base + t[i] * dir;
        const double before = collinear_ratio(p[0], p[1], p[2], p[3]);
        const double after = collinear_ratio(apply(g, p[0]), apply(g, p[1]), apply(g, p[2]), apply(g, p[3]));
        return rel_err(before, after);
    });
    s.property(kind, "area-preservation", [&] {
        const Isometry g = rng.isometry(kind);
        const Polygon poly{{rng.vec(-10.0, 10.0), rng.vec(-10.0, 10.0), rng.vec(-10.0, 10.0), rng.vec(-10.0, 10.0)}};
        return rel_err(area(poly), area(transform_polygon(g, poly)));
    });
    s.property(kind, "line-angle-invariance", [&] {
        const Isometry g = rng.isometry(kind);
        const Vec2 c1 = rng.vec(-5.0, 5.0), c2 = rng.vec(-5.0, 5.0);
        const Line l1 = Line::sloped(c1.x(), c1.y());
        const Line l2 = Line::sloped(c2.x(), c2.y());
        return rel_err(angle_lines_galilean(l1, l2).value,
                       angle_lines_galilean(transform_line(g, l1), transform_line(g, l2)).value);
    });
}

void minkowski_properties(Suite& s) {
    constexpr GeometryKind kind = GeometryKind::Minkowski;
    Sampler& rng = s.rng();

    s.discrete(kind, "causal-class-invariance", [&] {
        const Vec2 v = rng.vec(-10.0, 10.0);
        if (v == Vec2{}) return true;
        const Isometry g = rng.linear_element(kind);
        return classify(v) == classify(g.linear() * v);
    });
    s.discrete(kind, "light-cone-self-perpendicular", [&] {
        const double t = rng.uniform(-10.0, 10.0);
        if (t == 0.0) return true;
        const Vec2 v{t, rng.coin() ? t : -t};
        return classify(v) == CausalClass::Lightlike && norm(kind, v) == 0.0 && perpendicular(kind, v, v);
    });
}

}  // namespace

std::vector<PropertyResult> run_check_suite(std::size_t samples, std::uint64_t seed, const Tolerance& tol) {
    Suite suite(samples, seed, tol);
    for (GeometryKind kind : {GeometryKind::Euclidean, GeometryKind::Galilean, GeometryKind::Minkowski}) {
        common_properties(suite, kind);
        if (kind == GeometryKind::Galilean) galilean_properties(suite);
        if (kind == GeometryKind::Minkowski) minkowski_properties(suite);
    }
    return suite.take();
}

}  // namespace cayley::cli
