#include <gtest/gtest.h>

#include "wick/lamination.hpp"

using namespace wick;

TEST(Validate, EmptyPasses) { EXPECT_TRUE(validate(Lamination{}).ok); }

TEST(Validate, SameGeodesicOppositeOrientationFails) {
    Lamination lam;
    lam.leaves.push_back({geodesic_from_normal({0, 0, 1}), 0.3});
    lam.leaves.push_back({geodesic_from_normal({0, 0, -1}), 0.3});
    auto d = validate(lam);
    EXPECT_FALSE(d.ok);
    ASSERT_FALSE(d.failures.empty());
}

TEST(Validate, BoostedDisjointLeafPasses) {
    Vec3 n1(0, 0, 1);
    Vec3 n2 = -Vec3(std::sinh(1), 0, std::cosh(1));
    ASSERT_NEAR(mink(n1, n2), -std::cosh(1), 1e-14);
    Lamination lam;
    lam.leaves.push_back({geodesic_from_normal(n1), 0.3});
    lam.leaves.push_back({geodesic_from_normal(n2), 0.3});
    EXPECT_TRUE(validate(lam).ok);
}

TEST(Validate, CrossingLeavesAndBadWeightsFail) {
    Lamination lam;
    lam.leaves.push_back(make_leaf(0, 2, 0.3));
    lam.leaves.push_back(make_leaf(1, 3, 0.3));
    EXPECT_FALSE(validate(lam).ok);
    Lamination neg;
    neg.leaves.push_back(make_leaf(0, 2, -0.1));
    EXPECT_FALSE(validate(neg).ok);
    EXPECT_THROW(make_leaf(1, 1, 0.2), Error);
}

TEST(Validate, AsymptoticLeavesAreReported) {
    Lamination lam;
    lam.leaves.push_back(make_leaf(0, 1, 0.3));
    lam.leaves.push_back(make_leaf(1, 2, 0.3));
    auto d = validate(lam);
    EXPECT_TRUE(d.ok);
    EXPECT_EQ(d.asymptotic.size(), 1u);
}

TEST(Crossings, SingleLeaf) {
    Lamination lam;
    lam.leaves.push_back(make_leaf(M_PI, 0, 0.5));
    Vec3 x(std::sqrt(2.0), 0, -1), y(std::sqrt(2.0), 0, 1);
    auto cr = crossing_data(lam, x, y);
    ASSERT_EQ(cr.size(), 1u);
    EXPECT_DOUBLE_EQ(cr[0].weight, 0.5);
    EXPECT_LT((cr[0].normal - Vec3(0, 0, 1)).norm(), 1e-14);  // points towards y
    EXPECT_LT((sl2_to_mink(cr[0].X) - cr[0].normal).norm(), 1e-14);
    auto half = crossing_data(lam, Vec3(1, 0, 0), y);
    ASSERT_EQ(half.size(), 1u);
    EXPECT_DOUBLE_EQ(half[0].weight, 0.25);
    EXPECT_TRUE(crossing_data(lam, y, Vec3(std::sqrt(5.0), 0, 2)).empty());
    EXPECT_DOUBLE_EQ(total_mass(lam, Vec3(1, 0, 0), y), 0.25);
}

TEST(Crossings, MassIsAdditive) {
    Lamination lam;
    EXPECT_EQ(total_mass(lam, Vec3(1, 0, 0), h2_polar(2, 0.3)), 0);
    lam.leaves.push_back(make_leaf(-0.5, 0.5, 0.3));  // cuts the x1 axis near 1
    lam.leaves.push_back(make_leaf(-0.2, 0.2, 0.7));
    Vec3 far = h2_polar(6, 0);
    EXPECT_NEAR(total_mass(lam, Vec3(1, 0, 0), far), 1.0, 1e-15);
    auto cr = crossing_data(lam, Vec3(1, 0, 0), far);
    ASSERT_EQ(cr.size(), 2u);
    EXPECT_EQ(cr[0].leaf, 0);  // ordered along the segment
    EXPECT_LT(cr[0].t, cr[1].t);
}

TEST(Approximate, LebesgueFamily) {
    Geodesic g = geodesic(M_PI, 0);
    auto fam = ParametricFamily::lebesgue(g, 0, 1);
    auto lam = approximate(fam, 4);
    ASSERT_EQ(lam.leaves.size(), 4u);
    for (int k = 0; k < 4; ++k) {
        double s = (2 * k + 1) / 8.0;
        EXPECT_DOUBLE_EQ(lam.leaves[k].weight, 0.25);
        EXPECT_NEAR(mink(fam.point(s), lam.leaves[k].g.n), 0, 1e-14);
        EXPECT_NEAR(std::abs(mink(fam.normal(s), lam.leaves[k].g.n)), 1, 1e-14);
    }
    auto one = approximate(fam, 1);
    ASSERT_EQ(one.leaves.size(), 1u);
    EXPECT_DOUBLE_EQ(one.leaves[0].weight, 1.0);
    EXPECT_NEAR(mink(fam.point(0.5), one.leaves[0].g.n), 0, 1e-14);
    EXPECT_TRUE(approximate(ParametricFamily::lebesgue(g, 0, 1, 0.0), 8).leaves.empty());
    EXPECT_TRUE(validate(approximate(fam, 64)).ok);
}

TEST(Approximate, IntegralMatchesRiemannSum) {
    ParametricFamily fam{geodesic(0.3, 2.5), {0, 0.4, 1.3}, {1.0, 0.25}};
    EXPECT_NEAR(fam.mass(0, 1.3), 0.4 + 0.225, 1e-15);
    // midpoint rule on each piece, split at the density jump
    Vec3 sum = Vec3::Zero();
    const int n = 100000;
    for (auto [lo, hi] : {std::pair{0.1, 0.4}, std::pair{0.4, 1.2}})
        for (int k = 0; k < n; ++k) {
            double s = lo + (hi - lo) * (k + 0.5) / n;
            sum += fam.density_at(s) * fam.normal(s) * ((hi - lo) / n);
        }
    EXPECT_LT((fam.integral(0.1, 1.2) - sum).norm(), 1e-9);
    EXPECT_NEAR(fam.foot_param(fam.point(0.77)), 0.77, 1e-12);
}

TEST(Push, InvarianceExamples) {
    EXPECT_TRUE(push(Lamination{}, Mat3::Identity()).leaves.empty());
    Lamination lam;
    lam.leaves.push_back(make_leaf(0.4, 2.0, 0.5));
    Mat3 boost = so21(boost_along(lam.leaves[0].g, 0.9));
    EXPECT_TRUE(is_invariant(lam, boost));
    Mat3 rot = so21(pi_rotation(h2_polar(1.0, 4.0)));
    EXPECT_FALSE(is_invariant(lam, rot));
    auto pushed = push(lam, rot);
    EXPECT_NEAR(std::abs(mink(pushed.leaves[0].g.n, rot * lam.leaves[0].g.n)), 1, 1e-12);
}

TEST(Support, HalfPlanes) {
    Lamination lam;
    lam.boundary.push_back(geodesic(2.0, 4.3));
    Vec3 inside = lam.boundary[0].foot();
    inside = std::cosh(1) * inside + std::sinh(1) * lam.boundary[0].n;
    EXPECT_TRUE(lam.in_support(inside));
    EXPECT_FALSE(lam.in_support(std::cosh(2) * lam.boundary[0].foot() - std::sinh(2) * lam.boundary[0].n));
}
