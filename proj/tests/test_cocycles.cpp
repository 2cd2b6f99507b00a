#include <gtest/gtest.h>

#include "wick/cocycles.hpp"
#include "wick/sampling.hpp"

using namespace wick;

namespace {
const Vec3 kX0(std::sqrt(2.0), 0, -1);
const Vec3 kY0(std::sqrt(2.0), 0, 1);
Lamination one_leaf(double w) {
    Lamination lam;
    lam.leaves.push_back(make_leaf(M_PI, 0, w));
    return lam;
}
Lamination five() {
    Lamination lam;
    lam.leaves = {make_leaf(0.3, 1.1, 0.4), make_leaf(1.4, 2.6, 0.3), make_leaf(1.6, 2.2, 0.25), make_leaf(3.2, 4.4, 0.5),
                  make_leaf(4.9, 5.9, 0.35)};
    return lam;
}
Mat2 X_up() { return mink_to_sl2(Vec3(0, 0, 1)); }
}  // namespace

TEST(QuakeBend, EmptyAndDiagonal) {
    Lamination empty;
    EXPECT_LT((quake_bend(empty, cd(0.3, 0.4), kX0, kY0) - Mat2c::Identity()).norm(), 1e-15);
    auto lam = one_leaf(0.7);
    EXPECT_LT((quake_bend(lam, cd(0, 1), kY0, kY0) - Mat2c::Identity()).norm(), 1e-15);
    EXPECT_LT((quake_bend(lam, 0.0, kX0, kY0) - Mat2c::Identity()).norm(), 1e-15);
}

TEST(QuakeBend, OneFactor) {
    auto lam = one_leaf(2.0);
    EXPECT_LT(proj_dist(quake_bend(lam, 1.0, kX0, kY0), to_c(mat_exp(X_up()))), 1e-14);
    auto ab = ads_cocycle(one_leaf(0.6), kX0, kY0);
    EXPECT_LT(proj_dist(ab.left, mat_exp(Mat2(-0.3 * X_up()))), 1e-14);
    EXPECT_LT(proj_dist(ab.right, mat_exp(Mat2(0.3 * X_up()))), 1e-14);
    auto e = ads_cocycle(Lamination{}, kX0, kY0);
    EXPECT_LT(pair_dist(e, IsomPair{}), 1e-15);
}

TEST(QuakeBend, BendingAlongImaginaryAxis) {
    // the leaf whose translation generator is diag(1,-1) (axis (0, oo) of the upper half plane)
    Mat2 X = Eigen::Vector2d(1, -1).asDiagonal();
    Vec3 n = sl2_to_mink(X);
    Lamination lam;
    lam.leaves.push_back({geodesic_from_normal(n), M_PI / 2});
    Vec3 f = lam.leaves[0].g.foot();
    Vec3 x = std::cosh(1) * f - std::sinh(1) * n, y = std::cosh(1) * f + std::sinh(1) * n;
    Mat2c expected = Mat2c::Zero();
    expected(0, 0) = std::exp(cd(0, M_PI / 4));
    expected(1, 1) = std::exp(cd(0, -M_PI / 4));
    EXPECT_LT(proj_dist(hyperbolic_bending(lam, x, y), expected), 1e-14);
}

TEST(QuakeBend, CocycleIdentities) {
    auto lam = five();
    Rng rng(4);
    for (cd z : {cd(1), cd(-1), cd(0, 1), cd(0.3, 0.4)}) {
        for (int i = 0; i < 200; ++i) {
            Vec3 x = random_h2(rng, Vec3(1, 0, 0), 3), y = random_h2(rng, Vec3(1, 0, 0), 3),
                 w = random_h2(rng, Vec3(1, 0, 0), 3);
            Mat2c xy = quake_bend(lam, z, x, y), yx = quake_bend(lam, z, y, x);
            EXPECT_LT(proj_dist(Mat2c(xy * yx), Mat2c::Identity()), 1e-12);
            EXPECT_LT(proj_dist(Mat2c(xy * quake_bend(lam, z, y, w)), quake_bend(lam, z, x, w)), 1e-9);
        }
    }
    // three collinear points
    Vec3 a = h2_polar(3, 0.7), b = h2_polar(3, 2.0);
    double L = h2_distance(a, b);
    Vec3 u = (b - std::cosh(L) * a) / std::sinh(L);
    Vec3 m = std::cosh(0.4 * L) * a + std::sinh(0.4 * L) * u;
    EXPECT_LT(proj_dist(Mat2c(hyperbolic_bending(lam, a, m) * hyperbolic_bending(lam, m, b)), hyperbolic_bending(lam, a, b)),
              1e-12);
    auto p = ads_cocycle(lam, a, m) * ads_cocycle(lam, m, b);
    EXPECT_LT(pair_dist(p, ads_cocycle(lam, a, b)), 1e-10);
}

TEST(QuakeBend, DerivativeAtZero) {
    EXPECT_EQ(derivative_at_zero(Lamination{}, kX0, kY0).norm(), 0);
    EXPECT_LT((derivative_at_zero(one_leaf(0.8), kX0, kY0) - 0.4 * X_up()).norm(), 1e-15);
    Lamination two;
    two.leaves.push_back(make_leaf(-0.5, 0.5, 0.3));
    two.leaves.push_back(make_leaf(-0.2, 0.2, 0.7));
    Vec3 far = h2_polar(6, 0);
    auto cr = crossing_data(two, Vec3(1, 0, 0), far);
    Mat2 expected = 0.5 * (0.3 * cr[0].X + 0.7 * cr[1].X);
    EXPECT_LT((derivative_at_zero(two, Vec3(1, 0, 0), far) - expected).norm(), 1e-15);
    const double h = 1e-5;
    Mat2c fd = (quake_bend(two, h, Vec3(1, 0, 0), far) - quake_bend(two, -h, Vec3(1, 0, 0), far)) / (2 * h);
    EXPECT_LT((fd - to_c(expected)).norm(), 1e-8);
}

TEST(Lifted, BandRules) {
    Domain dom(one_leaf(0.5), kX0);
    // same retraction point: identity
    Vec3 p = dom.embed_band(0, 0.2, 1.0, 0.3), q = dom.embed_band(0, -0.5, 2.0, 0.3);
    EXPECT_LT(proj_dist(lifted(dom, p, q, cd(0, 1)), Mat2c::Identity()), 1e-13);
    // across the full band: the single leaf factor
    Vec3 a = dom.embed_band(0, 0.1, 1.0, 0.0), b = dom.embed_band(0, 0.1, 1.0, 1.0);
    EXPECT_LT(proj_dist(lifted(dom, a, b, cd(0, 1)), hyperbolic_bending(dom.lam(), kX0, kY0)), 1e-13);
    // faces: the base cocycle between Gauss images
    Vec3 c = dom.embed(h2_polar(1.2, -1.0), 1.5), d = dom.embed(h2_polar(1.4, 1.2), 0.7);
    EXPECT_LT(proj_dist(lifted(dom, c, d, cd(0, 1)), hyperbolic_bending(dom.lam(), h2_polar(1.2, -1.0), h2_polar(1.4, 1.2))),
              1e-13);
    auto ap = lifted_ads(dom, c, d);
    EXPECT_LT(pair_dist(ap, ads_cocycle(dom.lam(), h2_polar(1.2, -1.0), h2_polar(1.4, 1.2))), 1e-13);
}
