#include <gtest/gtest.h>

#include "wick/ads.hpp"
#include "wick/io.hpp"
#include "wick/sampling.hpp"
#include "wick/verify.hpp"

using namespace wick;

namespace {
const Vec3 kX0(std::sqrt(2.0), 0, -1);
Lamination one_leaf(double w) {
    Lamination lam;
    lam.leaves.push_back(make_leaf(M_PI, 0, w));
    return lam;
}
DomainSpec fixture(const std::string& name) { return load_lamination(std::string(WICK_FIXTURES) + "/" + name); }
}  // namespace

TEST(AdsBend, Examples) {
    Vec3 x = h2_polar(0.9, 1.0);
    EXPECT_LT(proj_dist(ads_bend(Lamination{}, Vec3(1, 0, 0), x), pi_rotation(x)), 1e-15);
    Vec3 base = h2_polar(0.9, -1.0);
    EXPECT_LT(proj_dist(ads_bend(one_leaf(0.4), kX0, base), pi_rotation(base)), 1e-14);
    Rng rng(1);
    auto r = verify_ads_length(one_leaf(0.4), kX0, rng, 5);
    EXPECT_LT(r.value, 1e-4);
}

TEST(Earthquake, Examples) {
    Vec3 x = h2_polar(0.9, 1.0);
    EXPECT_LT((earthquake(Lamination{}, Vec3(1, 0, 0), Side::left, x) - x).norm(), 1e-15);
    const double a = 0.6;
    Mat2 X = mink_to_sl2(Vec3(0, 0, 1));
    Vec3 across = h2_polar(1.2, 1.3);
    EXPECT_LT((earthquake(one_leaf(a), kX0, Side::left, across) - act(mat_exp(Mat2(0.5 * a * X)), across)).norm(), 1e-13);
    EXPECT_LT((earthquake(one_leaf(a), kX0, Side::right, across) - act(mat_exp(Mat2(-0.5 * a * X)), across)).norm(), 1e-13);
}

TEST(Earthquake, Injective) {
    auto spec = fixture("five_leaves.json");
    Rng rng(2);
    std::vector<Vec3> img;
    for (int i = 0; i < 1000; ++i) {
        Vec3 x = random_h2(rng, Vec3(1, 0, 0), 3);
        bool on = false;
        for (const auto& l : spec.lam.leaves) on = on || std::abs(mink(x, l.g.n)) < 1e-9;
        if (!on) img.push_back(earthquake(spec.lam, spec.basepoint, Side::left, x));
    }
    double best = INFINITY;
    for (size_t i = 0; i < img.size(); ++i)
        for (size_t j = 0; j < i; ++j) best = std::min(best, (img[i] - img[j]).norm());
    EXPECT_GT(best, 1e-9);
}

TEST(Earthquake, InverseIdentity) {
    Rng rng(3);
    EXPECT_EQ(earthquake_inverse_check(Lamination{}, Vec3(1, 0, 0), h2_polar(1, 0), h2_polar(1, 2)), 0);
    EXPECT_LT(earthquake_inverse_check(one_leaf(0.7), kX0, h2_polar(1, -1), h2_polar(1.5, 2)), 1e-12);
    auto spec = fixture("five_leaves.json");
    auto r = verify_earthquake(spec.lam, spec.basepoint, rng, 300);
    EXPECT_LT(r.value, 1e-8);
    // with a basepoint elsewhere the identity is unchanged
    auto r2 = verify_earthquake(spec.lam, h2_polar(0.5, 2.0), rng, 100);
    EXPECT_LT(r2.value, 1e-8);
}

TEST(BoundaryCurve, EmptyIsDiagonal) {
    auto s = boundary_samples(Domain(Lamination{}, Vec3(1, 0, 0)));
    ASSERT_FALSE(s.empty());
    for (const auto& b : s) {
        double d = norm_angle(b.point.first - b.point.second);
        EXPECT_LT(std::min(d, 2 * M_PI - d), 1e-12);
    }
    EXPECT_TRUE(achronal(s));
}

TEST(BoundaryCurve, SingleLeafTwoDiagonalArcs) {
    const double a = 0.8;
    Domain dom(one_leaf(a), kX0);
    auto s = boundary_samples(dom);
    int diag = 0, offset = 0;
    for (const auto& b : s) {
        double d = norm_angle(b.point.first - b.point.second);
        d = std::min(d, 2 * M_PI - d);
        if (d < 1e-12) ++diag;
        else ++offset;
    }
    // base side arc stays on the diagonal, far side arc is displaced
    EXPECT_GT(diag, 0);
    EXPECT_GT(offset, 0);
    EXPECT_TRUE(achronal(s));
}

TEST(BoundaryCurve, AchronalOnFixtures) {
    for (auto name : {"five_leaves.json", "rot3.json"}) {
        auto spec = fixture(name);
        EXPECT_TRUE(achronal(boundary_samples(Domain(spec.lam, spec.basepoint), 16))) << name;
    }
}

TEST(AdsHolonomy, Examples) {
    Mat2 g;
    g << 2, 1, 1, 1;
    auto h = ads_holonomy(Domain(Lamination{}, Vec3(1, 0, 0)), g);
    EXPECT_LT(pair_dist(h, IsomPair{g, g}), 1e-14);
    Domain one(one_leaf(0.5), kX0);
    Mat2 b = boost_along(one.lam().leaves[0].g, 0.7);
    EXPECT_LT(pair_dist(ads_holonomy(one, b), IsomPair{b, b}), 1e-12);
    EXPECT_THROW(ads_holonomy(one, g), Error);
}

TEST(AdsHolonomy, Homomorphism) {
    auto spec = fixture("rot3.json");
    Domain dom(spec.lam, spec.basepoint);
    Mat2 r = rotation_at(Vec3(1, 0, 0), 2 * M_PI / 3);
    auto h1 = ads_holonomy(dom, r);
    EXPECT_LT(pair_dist(ads_holonomy(dom, Mat2(r * r)), h1 * h1), 1e-10);
    EXPECT_LT(proj_dist(hyperbolic_holonomy(dom, Mat2(r * r)), Mat2c(hyperbolic_holonomy(dom, r) * hyperbolic_holonomy(dom, r))),
              1e-10);
    // holonomy intertwines the developing map
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        Vec3 p = sample_domain(rng, dom, 0.2, 3).p;
        AffineIsom h0 = flat_holonomy(dom, so21(r));
        EXPECT_LT(proj_dist(ads(dom, h0.apply(p)), h1.apply(ads(dom, p))), 1e-10);
    }
}

TEST(PastFrame, TotalLengthIsHalfPi) {
    Domain empty(Lamination{}, Vec3(1, 0, 0));
    Vec3 x = h2_polar(0.8, 0.4);
    auto pf = past_frame(empty, 1.7 * x);
    EXPECT_NEAR(pf.tau, std::atan(1.7), 1e-14);
    EXPECT_LT(proj_dist(pf.rho_plus, pi_rotation(x)), 1e-13);
    EXPECT_LT(proj_dist(pf.rho_minus, Mat2(Mat2::Identity())), 1e-13);
    auto spec = fixture("five_leaves.json");
    Domain dom(spec.lam, spec.basepoint);
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Vec3 p = sample_domain(rng, dom, 0.1, 4).p;
        auto f = past_frame(dom, p);
        EXPECT_NEAR(ads_time_distance(f.rho_minus, f.rho_plus), M_PI / 2, 1e-8);
        EXPECT_NEAR(ads_time_distance(f.rho_minus, f.point), f.tau, 1e-8);
        EXPECT_LT(proj_dist(f.point, ads(dom, p)), 1e-12);
    }
}
