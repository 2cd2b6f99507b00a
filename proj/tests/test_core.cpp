#include <gtest/gtest.h>

#include "wick/core.hpp"

using namespace wick;

namespace {
const double kPi = M_PI;
Mat2 E() {
    Mat2 m;
    m << 0, -1, 1, 0;
    return m;
}
}  // namespace

TEST(Minkowski, FormExamples) {
    EXPECT_DOUBLE_EQ(mink({1, 0, 0}, {1, 0, 0}), -1);
    EXPECT_DOUBLE_EQ(mink({0, 1, 0}, {0, 0, 1}), 0);
    EXPECT_DOUBLE_EQ(mink({2, 1, 0}, {1, 1, 1}), -1);
}

TEST(Minkowski, H2Distance) {
    Vec3 o(1, 0, 0), a(std::cosh(1), std::sinh(1), 0), b(std::cosh(1), -std::sinh(1), 0);
    EXPECT_NEAR(h2_distance(o, o), 0, 1e-15);
    EXPECT_NEAR(h2_distance(o, a), 1, 1e-14);
    EXPECT_NEAR(h2_distance(a, b), 2, 1e-14);
    EXPECT_NEAR(h2_distance(a, b), std::acosh(std::cosh(1) * std::cosh(1) + std::sinh(1) * std::sinh(1)), 1e-14);
}

TEST(Geodesics, NormalConvention) {
    EXPECT_LT((geodesic(0, kPi).n - Vec3(0, 0, -1)).norm(), 1e-15);
    EXPECT_LT((geodesic(kPi, 0).n - Vec3(0, 0, 1)).norm(), 1e-15);
    auto g = geodesic(0.4, 2.9);
    auto [a, b] = g.ends();
    EXPECT_NEAR(a, 0.4, 1e-12);
    EXPECT_NEAR(b, 2.9, 1e-12);
    auto [c, d] = geodesic_from_normal(g.n).ends();
    EXPECT_NEAR(c, 0.4, 1e-12);
    EXPECT_NEAR(d, 2.9, 1e-12);
}

TEST(Geodesics, PointsLieOnGeodesic) {
    auto g = geodesic(1.0, 4.0);
    for (double t : {-2.0, 0.0, 1.5}) {
        Vec3 p = g.point(t);
        EXPECT_NEAR(mink(p, g.n), 0, 1e-13);
        EXPECT_NEAR(mink(p, p), -1, 1e-12);
    }
    EXPECT_NEAR(h2_distance(g.point(-1), g.point(2)), 3, 1e-12);
}

TEST(MatExp, Examples) {
    Mat2 rot;
    rot << 0, -kPi / 2, kPi / 2, 0;
    EXPECT_LT((mat_exp(rot) - E()).norm(), 1e-15);
    Mat2 hyp = Eigen::Vector2d(1, -1).asDiagonal();
    EXPECT_LT((mat_exp(hyp) - Mat2(Eigen::Vector2d(std::exp(1), std::exp(-1)).asDiagonal())).norm(), 1e-14);
    Mat2 nil;
    nil << 0, 1, 0, 0;
    Mat2 expected;
    expected << 1, 1, 0, 1;
    EXPECT_LT((mat_exp(nil) - expected).norm(), 1e-15);
}

TEST(Sl2Mink, Dictionary) {
    // elliptic generator fixing i maps to a timelike multiple of (1,0,0)
    Vec3 v = sl2_to_mink(0.5 * E());
    EXPECT_NEAR(v[1], 0, 1e-15);
    EXPECT_NEAR(v[2], 0, 1e-15);
    EXPECT_GT(std::abs(v[0]), 0.1);
    // translation generator along geodesic(0, pi) corresponds to its normal
    Vec3 n = geodesic(0, kPi).n;
    EXPECT_LT((sl2_to_mink(mink_to_sl2(n)) - Vec3(0, 0, -1)).norm(), 1e-15);
    // exp(tX/2) translates along the geodesic: points stay on it
    Mat2 A = mat_exp(Mat2(0.5 * 0.7 * mink_to_sl2(n)));
    Vec3 p = geodesic(0, kPi).point(0.2);
    EXPECT_NEAR(mink(act(A, p), n), 0, 1e-14);
    EXPECT_NEAR(h2_distance(act(A, p), p), 0.7, 1e-12);
    Mat2 X;
    X << 0.3, -1.2, 0.7, -0.3;
    EXPECT_LT((mink_to_sl2(sl2_to_mink(X)) - X).norm(), 1e-12);
}

TEST(Sl2Mink, EquivarianceOfAdjointAction) {
    Mat2 A;
    A << 2, 1, 3, 2;
    Vec3 x(0.3, -0.4, 1.2);
    EXPECT_LT((sl2_to_mink(A * mink_to_sl2(x) * A.inverse()) - act(A, x)).norm(), 1e-12);
    EXPECT_LT((so21(A) * x - act(A, x)).norm(), 1e-12);
}

TEST(PiRotation, FixesPointSquaresToMinusId) {
    EXPECT_LT(proj_dist(pi_rotation({1, 0, 0}), E()), 1e-15);
    Vec3 p(std::cosh(0.8), std::sinh(0.8), 0);
    Mat2 R = pi_rotation(p);
    EXPECT_LT((R * R + Mat2::Identity()).norm(), 1e-12);
    EXPECT_LT((act(R, p) - p).norm(), 1e-12);
    Mat2 B = move_to(p);
    EXPECT_LT(proj_dist(R, Mat2(B * E() * B.inverse())), 1e-12);
}

TEST(Ads, DualOfDiagonalSubgroup) {
    AdsLine l{Mat2::Identity(), Mat2(Eigen::Vector2d(1, -1).asDiagonal())};
    AdsLine d = dual_line(l);
    auto on = [](const AdsLine& line, const Mat2& m) {
        // m in span{P, V}: coefficients from the form (P timelike unit, V spacelike unit)
        Mat2 proj = -ads_form(m, line.P) * line.P + ads_form(m, line.V) * line.V;
        return (proj - m).norm();
    };
    for (double t : {-0.7, 0.0, 1.1}) {
        Mat2 expected;
        expected << 0, std::exp(t), -std::exp(-t), 0;
        EXPECT_LT(on(d, expected), 1e-12) << t;
    }
    AdsLine dd = dual_line(d);
    for (double t : {-1.0, 0.0, 0.8}) EXPECT_LT(on(dd, l.at(t)), 1e-12);
}

TEST(Ads, DualEndpoints) {
    auto [a, b] = dual_endpoints({0.1, 0.2}, {0.3, 0.4});
    EXPECT_EQ(a, ProdPoint(0.1, 0.4));
    EXPECT_EQ(b, ProdPoint(0.3, 0.2));
    auto [c, d] = dual_endpoints(a, b);
    EXPECT_EQ(c, ProdPoint(0.1, 0.2));
    EXPECT_EQ(d, ProdPoint(0.3, 0.4));
}

TEST(Ads, BoundaryEmbed) {
    Mat2 M = boundary_embed_vec({1, 0}, {1, 0});
    Mat2 expected;
    expected << 0, 1, 0, 0;
    EXPECT_LT((M - expected).norm(), 1e-15);
    auto [l, r] = boundary_inverse(boundary_embed(0.7, 2.3));
    EXPECT_NEAR(l, 0.7, 1e-12);
    EXPECT_NEAR(r, 2.3, 1e-12);
    // diagonal points are null and lie on the boundary of P(Id): orthogonal to Id
    Mat2 D = boundary_embed(1.3, 1.3);
    EXPECT_NEAR(D.determinant(), 0, 1e-15);
    EXPECT_NEAR(ads_form(D, Mat2::Identity()), 0, 1e-15);
}

TEST(Ads, RotationAboutAndPlaneAngle) {
    Mat2 x = Eigen::Vector2d(std::exp(1), std::exp(-1)).asDiagonal();
    EXPECT_LT((rotation_about(x).apply(E()) - x * E() * x).norm(), 1e-12);
    EXPECT_LT((x * E() * x - E()).norm(), 1e-12);
    EXPECT_NEAR(plane_angle(Mat2::Identity(), x * x), 2, 1e-12);
    auto id = rotation_about(Mat2::Identity());
    EXPECT_LT(pair_dist(id, IsomPair{}), 1e-15);
}

TEST(ModelExp, Examples) {
    Vec4 x(1, 0, 0, 0), v(0, 1, 0, 0);
    EXPECT_LT((ds_exp(Vec4(0, 0, 0, 1), Vec4(0, 1, 0, 0), M_PI / 2) - Vec4(0, 1, 0, 0)).norm(), 1e-15);
    EXPECT_LT((ds_exp(x, v, 0) - x).norm(), 1e-15);
    Mat2 V = E();  // timelike tangent at Id
    EXPECT_LT(proj_dist(ads_exp(Mat2::Identity(), V, M_PI), Mat2::Identity()), 1e-14);
    EXPECT_LT((ads_exp(Mat2::Identity(), V, 0) - Mat2::Identity()).norm(), 1e-15);
    EXPECT_THROW(ds_exp(x, x, 1), Error);
}

TEST(TranslationLength, Examples) {
    Mat2 d = Eigen::Vector2d(std::exp(1), std::exp(-1)).asDiagonal();
    EXPECT_NEAR(translation_length(d), 2, 1e-12);
    Mat2 p;
    p << 1, 1, 0, 1;
    EXPECT_NEAR(translation_length(p), 0, 1e-15);
    Mat2 g;
    g << 2, 1, 1, 1;
    EXPECT_NEAR(translation_length(g * d * g.inverse()), 2, 1e-12);
}

TEST(Hermitian, ActionPreservesHyperboloid) {
    Mat2c A;
    A << cd(1, 0.5), cd(0.2, 0), cd(-0.3, 0.1), cd(1, 0);
    A /= std::sqrt(A.determinant());
    Vec4 x = embed4(h2_polar(0.7, 1.1));
    Vec4 y = from_herm(A * herm(x) * A.adjoint());
    EXPECT_NEAR(mink4(y, y), -1, 1e-12);
    EXPECT_LT((so31(A) * x - y).norm(), 1e-12);
    auto [w, c] = hyperboloid_to_halfspace(y);
    EXPECT_LT((halfspace_to_hyperboloid(w, c) - y).norm(), 1e-12);
}
