#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cayley/figures.hpp"
#include "oracles.hpp"
#include "sampler.hpp"

using namespace cayley;
using cayley::cli::Sampler;

namespace {

constexpr GeometryKind kEuclid = GeometryKind::Euclidean;
constexpr GeometryKind kGalileo = GeometryKind::Galilean;
constexpr GeometryKind kMinkowski = GeometryKind::Minkowski;

template <typename F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a GeometryError";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(CircleLocus, Euclidean) {
    const auto pts = circle_locus(Circle(kEuclid, {0, 0}, 1), 8);
    ASSERT_EQ(pts.size(), 8u);
    EXPECT_EQ(pts[0], Vec2(1, 0));
    for (const Vec2& p : pts) EXPECT_NEAR(std::hypot(p.x(), p.y()), 1.0, 1e-12);
    EXPECT_EQ(circle_branches(Circle(kEuclid, {0, 0}, 1), 8).size(), 1u);
}

TEST(CircleLocus, GalileanIsTwoVerticalLines) {
    const auto branches = circle_branches(Circle(kGalileo, {0, 0}, 2), 10);
    ASSERT_EQ(branches.size(), 2u);
    for (const Vec2& p : branches[0]) EXPECT_EQ(p.x(), -2.0);
    for (const Vec2& p : branches[1]) EXPECT_EQ(p.x(), 2.0);
    EXPECT_EQ(branches[0].size() + branches[1].size(), 10u);
}

TEST(CircleLocus, MinkowskiIsFourHyperbolaBranches) {
    const auto branches = circle_branches(Circle(kMinkowski, {0, 0}, 1), 40);
    ASSERT_EQ(branches.size(), 4u);
    std::size_t total = 0;
    for (const auto& branch : branches) {
        total += branch.size();
        for (const Vec2& p : branch) EXPECT_NEAR(std::abs(p.x() * p.x() - p.y() * p.y()), 1.0, 1e-9);
    }
    EXPECT_EQ(total, 40u);
    // right branch x > 0, left x < 0, upper y > 0, lower y < 0
    EXPECT_GT(branches[0][0].x(), 0);
    EXPECT_LT(branches[1][0].x(), 0);
    EXPECT_GT(branches[2][0].y(), 0);
    EXPECT_LT(branches[3][0].y(), 0);
}

TEST(CircleLocus, Errors) {
    EXPECT_EQ(error_of([] { circle_locus(Circle(kEuclid, {0, 0}, 1), 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(error_of([] { circle_locus(Circle(kGalileo, {0, 0}, 0), 4); }), ErrorCode::DegenerateRadius);
    EXPECT_EQ(error_of([] { Circle(kEuclid, {0, 0}, -1); }), ErrorCode::DegenerateRadius);
    EXPECT_EQ(circle_locus(Circle(kEuclid, {2, 3}, 0), 4).front(), Vec2(2, 3));
}

TEST(GalileanCircle, EveryLocusPointAtRadiusFromAnyCenter) {
    Sampler rng(41);
    for (int i = 0; i < 200; ++i) {
        const Vec2 c = rng.vec(-10, 10);
        const double r = rng.uniform(0.1, 10);
        const Circle circle(kGalileo, c, r);
        const Vec2 other_center{c.x(), rng.uniform(-100, 100)};
        EXPECT_TRUE(is_center(circle, other_center));
        for (const Vec2& p : circle_locus(circle, 16)) {
            EXPECT_NEAR(std::abs(distance(kGalileo, other_center, p)), r, 1e-12);
        }
    }
}

TEST(IsCenter, Examples) {
    const Circle circle(kGalileo, {0, 0}, 2);
    EXPECT_TRUE(is_center(circle, {0, 17}));
    EXPECT_TRUE(is_center(circle, {0, 0}));
    EXPECT_FALSE(is_center(circle, {0.5, 0}));
    EXPECT_EQ(error_of([] { is_center(Circle(kEuclid, {0, 0}, 1), {0, 0}); }), ErrorCode::WrongGeometry);
}

TEST(TransformLine, Examples) {
    const Line l = transform_line(galilean_boost(1.0), Line::sloped(3, 0));
    EXPECT_NEAR(l.slope(), 2.0, 1e-15);
    const Line same = transform_line(identity(kEuclid), Line::sloped(0.5, 2));
    EXPECT_EQ(same.slope(), 0.5);
    EXPECT_EQ(same.intercept(), 2.0);
    const Line turned = transform_line(rotation(std::numbers::pi / 2), Line::sloped(0, 0));
    ASSERT_TRUE(turned.is_vertical());
    EXPECT_NEAR(turned.vertical_x(), 0.0, 1e-15);
    EXPECT_EQ(error_of([&] { turned.slope(); }), ErrorCode::VerticalLine);
}

TEST(TransformLine, GalileanSlopeLaw) {
    Sampler rng(42);
    for (int i = 0; i < 500; ++i) {
        const double lambda = rng.uniform(-5, 5), b = rng.uniform(-5, 5), u = rng.uniform(-5, 5);
        const Line l = transform_line(galilean_boost(u), Line::sloped(lambda, b));
        EXPECT_NEAR(l.slope(), lambda - u, 1e-12);
        // vertical lines stay vertical
        EXPECT_TRUE(transform_line(galilean_boost(u), Line::vertical(b)).is_vertical());
    }
}

TEST(TransformLine, PreservesIncidence) {
    Sampler rng(43);
    for (GeometryKind k : {kEuclid, kGalileo, kMinkowski}) {
        for (int i = 0; i < 300; ++i) {
            const Vec2 a = rng.vec(-10, 10), b = rng.vec(-10, 10);
            const Isometry g = rng.isometry(k);
            const Line image = transform_line(g, Line::through(a, b));
            const Vec2 ga = apply(g, a), gb = apply(g, b);
            EXPECT_TRUE(collinear(image.anchor(), image.anchor() + image.direction(), ga, Tolerance{1e-9, 1e-9}));
            EXPECT_TRUE(collinear(image.anchor(), image.anchor() + image.direction(), gb, Tolerance{1e-9, 1e-9}));
        }
    }
}

TEST(Parallel, Examples) {
    EXPECT_TRUE(parallel(Line::sloped(2, 0), Line::sloped(2, 5)));
    EXPECT_FALSE(parallel(Line::sloped(2, 0), Line::sloped(3, 0)));
    EXPECT_TRUE(parallel(Line::vertical(1), Line::vertical(4)));
    EXPECT_FALSE(parallel(Line::vertical(1), Line::sloped(0, 0)));
}

TEST(LineAngle, GalileanInvariantUnderBoosts) {
    EXPECT_EQ(angle_lines_galilean(Line::sloped(2, 0), Line::sloped(5, 1)).value, 3.0);
    EXPECT_EQ(error_of([] { angle_lines_galilean(Line::vertical(0), Line::sloped(1, 0)); }), ErrorCode::VerticalLine);
    Sampler rng(44);
    for (int i = 0; i < 500; ++i) {
        const Line l1 = Line::sloped(rng.uniform(-5, 5), rng.uniform(-5, 5));
        const Line l2 = Line::sloped(rng.uniform(-5, 5), rng.uniform(-5, 5));
        const Isometry g = rng.isometry(kGalileo);
        EXPECT_NEAR(angle_lines_galilean(transform_line(g, l1), transform_line(g, l2)).value,
                    angle_lines_galilean(l1, l2).value, 1e-9);
    }
}

TEST(CollinearRatio, Examples) {
    EXPECT_EQ(collinear_ratio({0, 0}, {2, 0}, {0, 0}, {1, 0}), 2.0);
    EXPECT_EQ(collinear_ratio({1, 1}, {1, 1}, {0, 0}, {2, 2}), 0.0);
    EXPECT_EQ(collinear_ratio({0, 0}, {-2, -2}, {0, 0}, {1, 1}), -2.0);
    EXPECT_EQ(error_of([] { collinear_ratio({0, 0}, {1, 0}, {2, 0}, {2, 0}); }), ErrorCode::DegenerateDenominator);
    EXPECT_EQ(error_of([] { collinear_ratio({0, 0}, {1, 0}, {0, 1}, {1, 1}); }), ErrorCode::NotCollinear);
}

TEST(CollinearRatio, PreservedByAllIsometries) {
    Sampler rng(45);
    for (GeometryKind k : {kEuclid, kGalileo, kMinkowski}) {
        int checked = 0;
        while (checked < 300) {
            const Vec2 p = rng.vec(-10, 10), dir = rng.vec(-1, 1);
            if (std::hypot(dir.x(), dir.y()) < 0.1) continue;
            const double t[4] = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
            if (std::abs(t[2] - t[3]) < 0.1) continue;
            Vec2 pts[4] = {p, p, p, p};
            for (int j = 0; j < 4; ++j) pts[j] = p + t[j] * dir;
            const Isometry g = rng.isometry(k);
            const double before = collinear_ratio(pts[0], pts[1], pts[2], pts[3], Tolerance{1e-9, 1e-9});
            const double after = collinear_ratio(apply(g, pts[0]), apply(g, pts[1]), apply(g, pts[2]),
                                                 apply(g, pts[3]), Tolerance{1e-7, 1e-7});
            EXPECT_NEAR(after, before, 1e-7 * (1 + std::abs(before)));
            ++checked;
        }
    }
}

TEST(Area, ExamplesAndOracle) {
    EXPECT_EQ(area(Polygon({{0, 0}, {1, 0}, {0, 1}})), 0.5);
    EXPECT_EQ(area(Polygon({{0, 0}, {1, 1}, {2, 2}})), 0.0);
    EXPECT_EQ(area(Polygon({{0, 0}, {2, 0}, {2, 3}, {0, 3}})), 6.0);
    EXPECT_EQ(error_of([] { Polygon({{0, 0}, {1, 0}}); }), ErrorCode::TooFewVertices);
    Sampler rng(46);
    for (int i = 0; i < 500; ++i) {
        const Vec2 a = rng.vec(-10, 10), b = rng.vec(-10, 10), c = rng.vec(-10, 10);
        const double expected = oracle::heron({a.x(), a.y()}, {b.x(), b.y()}, {c.x(), c.y()});
        EXPECT_NEAR(area(Polygon({a, b, c})), expected, 1e-9 * (1 + expected));
    }
}

TEST(Area, PreservedByUnimodularIsometries) {
    Sampler rng(47);
    for (GeometryKind k : {kEuclid, kGalileo, kMinkowski}) {
        for (int i = 0; i < 300; ++i) {
            std::vector<Vec2> v;
            for (int j = 0; j < 3 + i % 3; ++j) v.push_back(rng.vec(-10, 10));
            const Polygon poly(v);
            const double before = area(poly);
            const double after = area(transform_polygon(rng.isometry(k), poly));
            EXPECT_NEAR(after, before, 1e-9 * (1 + before));
        }
    }
}

TEST(Collinear, PreservedByIsometries) {
    Sampler rng(48);
    for (GeometryKind k : {kEuclid, kGalileo, kMinkowski}) {
        for (int i = 0; i < 300; ++i) {
            const Vec2 a = rng.vec(-10, 10), b = rng.vec(-10, 10);
            const Vec2 c = a + rng.uniform(-3, 3) * (b - a);
            const Isometry g = rng.isometry(k);
            EXPECT_TRUE(collinear(apply(g, a), apply(g, b), apply(g, c), Tolerance{1e-9, 1e-9}));
        }
    }
}

TEST(LineTest, ThroughAndAccessors) {
    const Line l = Line::through({0, 1}, {2, 5});
    EXPECT_EQ(l.slope(), 2.0);
    EXPECT_EQ(l.intercept(), 1.0);
    EXPECT_TRUE(Line::through({3, 0}, {3, 4}).is_vertical());
    EXPECT_EQ(error_of([] { Line::through({1, 1}, {1, 1}); }), ErrorCode::DegenerateFigure);
    EXPECT_EQ(error_of([] { Line::sloped(1, 0).vertical_x(); }), ErrorCode::InvalidArgument);
}
