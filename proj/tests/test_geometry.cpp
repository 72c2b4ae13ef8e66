#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spatial_vote/spatial_vote.hpp"

namespace sv = spatial_vote;
using fixtures::pt;

TEST(ClipLine, BoxExamples) {
    const auto box = sv::PolicySpace::unit_box(2);
    auto l = sv::clip_line(box, pt({0, 0}), pt({1, 0}));
    EXPECT_DOUBLE_EQ(l.t_min, -1.0);
    EXPECT_DOUBLE_EQ(l.t_max, 1.0);
    l = sv::clip_line(box, pt({0.5, 0}), pt({1, 0}));
    EXPECT_DOUBLE_EQ(l.t_min, -1.5);
    EXPECT_DOUBLE_EQ(l.t_max, 0.5);
    l = sv::clip_line(box, pt({0, 0}), pt({3, 3}));
    EXPECT_NEAR(l.t_max, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(l.direction.norm(), 1.0, 1e-12);
}

TEST(ClipLine, BallDiameter) {
    const auto ball = sv::PolicySpace::ball(pt({0, 0}), 1.0);
    const auto l = sv::clip_line(ball, pt({0, 0}), pt({1, 1}));
    EXPECT_NEAR(l.t_min, -1.0, 1e-12);
    EXPECT_NEAR(l.t_max, 1.0, 1e-12);
    EXPECT_NEAR(l.direction[0], 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(ClipLine, Errors) {
    const auto box = sv::PolicySpace::unit_box(2);
    EXPECT_THROW(sv::clip_line(box, pt({2, 0}), pt({1, 0})), sv::DomainError);
    EXPECT_THROW(sv::clip_line(box, pt({0, 0}), pt({0, 0})), sv::DomainError);
    EXPECT_THROW(sv::clip_line(box, pt({0, 0}), pt({1, 0, 0})), sv::DimensionError);
}

TEST(ClipLine, BoundaryAnchorGivesOneSidedRange) {
    const auto box = sv::PolicySpace::unit_box(2);
    const auto l = sv::clip_line(box, pt({1, 0}), pt({1, 0}));
    EXPECT_DOUBLE_EQ(l.t_max, 0.0);
    EXPECT_DOUBLE_EQ(l.t_min, -2.0);
}

TEST(ClipLine, EndpointsOnBoundaryAndSegmentInside) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> f(0.0, 1.0);
    const std::vector<sv::PolicySpace> spaces = {
        sv::PolicySpace::unit_box(2), sv::PolicySpace::ball(pt({0.5, -0.5}), 2.0),
        sv::PolicySpace::box(pt({-1, 0, 2}), pt({1, 3, 2.5})), sv::PolicySpace::ball(pt({0, 0, 0}), 1.0)};
    for (const auto& space : spaces) {
        const int k = space.dimension();
        const double tol = 1e-8 * space.diameter();
        for (int i = 0; i < 50; ++i) {
            const sv::Point z = space.sample_uniform(rng);
            sv::Vector d(k);
            for (int a = 0; a < k; ++a) d[a] = u(rng);
            const auto l = sv::clip_line(space, z, d);
            EXPECT_LE(l.t_min, 0.0);
            EXPECT_GE(l.t_max, 0.0);
            EXPECT_NEAR(l.direction.norm(), 1.0, 1e-12);
            EXPECT_NEAR(space.boundary_slack(l.point(l.t_min)), 0.0, tol);
            EXPECT_NEAR(space.boundary_slack(l.point(l.t_max)), 0.0, tol);
            for (int j = 0; j < 100; ++j) {
                const double t = l.t_min + f(rng) * (l.t_max - l.t_min);
                EXPECT_TRUE(space.contains(l.point(t), tol));
            }
        }
    }
}

TEST(SplitHalfLines, Examples) {
    sv::ClippedLine l{pt({0, 0}), pt({1, 0}), -1.0, 1.0};
    auto h = sv::split_half_lines(l);
    EXPECT_EQ(h.plus.lo, 0.0);
    EXPECT_EQ(h.plus.hi, 1.0);
    EXPECT_EQ(h.minus.lo, -1.0);
    EXPECT_EQ(h.minus.hi, 0.0);

    l.t_min = -1.5;
    l.t_max = 0.5;
    h = sv::split_half_lines(l);
    EXPECT_EQ(h.plus.hi, 0.5);
    EXPECT_EQ(h.minus.lo, -1.5);

    l.t_min = l.t_max = 0.0;
    h = sv::split_half_lines(l);
    EXPECT_EQ(h.plus.length(), 0.0);
    EXPECT_EQ(h.minus.length(), 0.0);
    EXPECT_TRUE(h.plus.contains(0.0));
    EXPECT_TRUE(h.minus.contains(0.0));
}

TEST(SplitHalfLines, PartitionAtParameterLevel) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const sv::ClippedLine l{pt({0, 0}), pt({1, 0}), -u(rng), u(rng)};
        const auto h = sv::split_half_lines(l);
        EXPECT_EQ(h.minus.lo, l.t_min);
        EXPECT_EQ(h.plus.hi, l.t_max);
        EXPECT_EQ(h.minus.hi, h.plus.lo);
        EXPECT_EQ(h.plus.lo, 0.0);
        EXPECT_DOUBLE_EQ(h.plus.length() + h.minus.length(), l.range().length());
    }
}

TEST(Distance, ExamplesAndMetricAxioms) {
    EXPECT_EQ(sv::distance(pt({1, 1}), pt({1, 1})), 0.0);
    EXPECT_DOUBLE_EQ(sv::distance(pt({0, 0}), pt({1, 0})), 1.0);
    EXPECT_DOUBLE_EQ(sv::distance(pt({1, 2}), pt({4, 6})), 5.0);
    EXPECT_THROW(sv::distance(pt({0, 0}), pt({0})), sv::DimensionError);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        const sv::Point a = pt({u(rng), u(rng), u(rng)});
        const sv::Point b = pt({u(rng), u(rng), u(rng)});
        const sv::Point c = pt({u(rng), u(rng), u(rng)});
        EXPECT_NEAR(sv::distance(a, b), sv::distance(b, a), 1e-12);
        EXPECT_LE(sv::distance(a, c), sv::distance(a, b) + sv::distance(b, c) + 1e-12);
    }
}

TEST(CanonicalDirection, FirstNonzeroPositive) {
    EXPECT_EQ(sv::canonical_direction(pt({-1, 2})), pt({1, -2}));
    EXPECT_EQ(sv::canonical_direction(pt({0, -3, 1})), pt({0, 3, -1}));
    EXPECT_EQ(sv::canonical_direction(pt({0.5, -1})), pt({0.5, -1}));
}

TEST(GenerateDirections, PlanarEvenSpacing) {
    const auto d = sv::generate_directions(2, 2, 0, 0.0);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_NEAR(d[0][0], 1.0, 1e-15);
    EXPECT_NEAR(d[0][1], 0.0, 1e-15);
    EXPECT_NEAR(d[1][0], 0.0, 1e-15);
    EXPECT_NEAR(d[1][1], 1.0, 1e-15);

    const auto j = sv::generate_directions(2, 8, 5);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const double angle = std::atan2(j[i][1], j[i][0]);
        EXPECT_GE(angle, 0.0);
        EXPECT_LT(angle, std::numbers::pi);
        if (i > 0) {
            EXPECT_NEAR(angle - std::atan2(j[i - 1][1], j[i - 1][0]), std::numbers::pi / 8, 1e-12);
        }
    }
}

TEST(GenerateDirections, Deterministic) {
    EXPECT_EQ(sv::generate_directions(2, 16, 42), sv::generate_directions(2, 16, 42));
    EXPECT_EQ(sv::generate_directions(3, 50, 42), sv::generate_directions(3, 50, 42));
    EXPECT_NE(sv::generate_directions(3, 50, 42), sv::generate_directions(3, 50, 43));
}

TEST(GenerateDirections, UnitNormAndNonParallel) {
    for (int k : {2, 3, 5}) {
        const auto d = sv::generate_directions(k, 100, 1);
        ASSERT_EQ(d.size(), 100u);
        for (std::size_t a = 0; a < d.size(); ++a) {
            EXPECT_NEAR(d[a].norm(), 1.0, 1e-12);
            for (std::size_t b = a + 1; b < d.size(); ++b) {
                EXPECT_GT(1.0 - std::abs(d[a].dot(d[b])), 1e-10);
            }
        }
    }
}

TEST(GenerateDirections, SphereDirectionsAreCanonical) {
    for (const auto& v : sv::generate_directions(3, 200, 9)) EXPECT_EQ(v, sv::canonical_direction(v));
}

TEST(GenerateDirections, Errors) {
    EXPECT_THROW(sv::generate_directions(2, 0, 0), sv::DomainError);
    EXPECT_THROW(sv::generate_directions(1, 2, 0), sv::DomainError);
    EXPECT_EQ(sv::generate_directions(1, 1, 0).size(), 1u);
}

TEST(GridPoints, CoversBoxAndFiltersBall) {
    const auto box = sv::grid_points(sv::PolicySpace::unit_box(2), 5);
    ASSERT_EQ(box.size(), 25u);
    EXPECT_EQ(box.front(), pt({-1, -1}));
    EXPECT_EQ(box[1], pt({-0.5, -1}));
    EXPECT_EQ(box.back(), pt({1, 1}));
    const auto ball = sv::PolicySpace::ball(pt({0, 0}), 1.0);
    const auto pts = sv::grid_points(ball, 5);
    EXPECT_EQ(pts.size(), 13u);
    for (const auto& p : pts) EXPECT_TRUE(ball.contains(p));
    EXPECT_THROW(sv::grid_points(ball, 1), sv::DomainError);
}
