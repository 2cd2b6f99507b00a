#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace wick {

using cd = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// every failure carries a short machine code (CoincidentEndpoints, QueryOnLeaf, ...)
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg) : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// ---- Minkowski 3-space, signature (-,+,+)
double mink(const Vec3& u, const Vec3& v);
Mat3 eta3();
bool is_h2(const Vec3& v, double tol = 1e-12);
Vec3 to_h2(const Vec3& v);  // rescale a future timelike vector onto the hyperboloid
Vec3 h2_polar(double r, double phi);
double h2_distance(const Vec3& x, const Vec3& y);

// ---- ideal points: theta <-> null ray (1, cos, sin)
double norm_angle(double t);
Vec3 ideal(double theta);
double ideal_angle(const Vec3& null_ray);

// oriented geodesic, unit normal n with det(rows x-, x+, n) > 0
struct Geodesic {
    Vec3 n;
    std::pair<double, double> ends() const;
    Vec3 foot() const;     // closest point to (1,0,0)
    Vec3 tangent() const;  // unit, from x- towards x+
    Vec3 point(double t) const { return std::cosh(t) * foot() + std::sinh(t) * tangent(); }
};
Geodesic geodesic(double xi_minus, double xi_plus);
Geodesic geodesic_from_normal(const Vec3& n);

// ---- sl(2,R) <-> R^{2,1}; H^2 as symmetric matrices, action S -> A S A^T
Mat2 Jm();  // [[0,1],[-1,0]]
Mat2 sym_of(const Vec3& x);
Vec3 from_sym(const Mat2& S);
Mat2 mink_to_sl2(const Vec3& x);
Vec3 sl2_to_mink(const Mat2& X);
Mat2c mat_exp(const Mat2c& X);
Mat2 mat_exp(const Mat2& X);
Mat3 so21(const Mat2& A);
Vec3 act(const Mat2& A, const Vec3& x);
Mat2 move_to(const Vec3& p);  // SL2 element sending (1,0,0) to p
Mat2 pi_rotation(const Vec3& p);
Vec2 ideal_vec(double theta);
double vec_angle(const Vec2& v);
double act_ideal(const Mat2& A, double theta);
double translation_length(const Mat2& A);
Mat2 boost_along(const Geodesic& g, double t);  // translation by t towards x+
Mat2 rotation_at(const Vec3& p, double angle);  // positive rotation about p

// ---- PSL sign handling
Mat2c proj_normalize(Mat2c A);
Mat2 proj_normalize(Mat2 A);
double proj_dist(const Mat2c& A, const Mat2c& B);
double proj_dist(const Mat2& A, const Mat2& B);
Mat2c to_c(const Mat2& A);

// ---- AdS: X_{-1} = PSL(2,R), form -det
Mat2 adj(const Mat2& X);
double ads_form(const Mat2& X, const Mat2& Y);
struct IsomPair {
    Mat2 left = Mat2::Identity(), right = Mat2::Identity();
    Mat2 apply(const Mat2& X) const { return left * X * right.inverse(); }
    IsomPair operator*(const IsomPair& o) const { return {left * o.left, right * o.right}; }
};
double pair_dist(const IsomPair& a, const IsomPair& b);
struct AdsLine {  // t -> ch t P + sh t V
    Mat2 P, V;
    Mat2 at(double t) const { return std::cosh(t) * P + std::sinh(t) * V; }
};
AdsLine dual_line(const AdsLine& l);
Mat2 dual_point_of_plane(const Mat2& x);  // the plane P(x) is described by x itself
using ProdPoint = std::pair<double, double>;  // (xiL, xiR)
std::pair<ProdPoint, ProdPoint> dual_endpoints(const ProdPoint& xm, const ProdPoint& xp);
Mat2 boundary_embed_vec(const Vec2& v, const Vec2& w);
Mat2 boundary_embed(double xiL, double xiR);
ProdPoint boundary_inverse(const Mat2& M);
IsomPair rotation_about(const Mat2& x);
double plane_angle(const Mat2& x1, const Mat2& x2);

// ---- R^{3,1}: H^3 and de Sitter; Hermitian model H = A H A^*
double mink4(const Vec4& u, const Vec4& v);
Vec4 embed4(const Vec3& x);
Mat2c herm(const Vec4& x);
Vec4 from_herm(const Mat2c& H);
Mat4 so31(const Mat2c& A);
Vec4 halfspace_to_hyperboloid(cd w, double c);
std::pair<cd, double> hyperboloid_to_halfspace(const Vec4& x);
Vec4 ds_normalize(Vec4 v);
double h3_distance(const Vec4& x, const Vec4& y);

enum class ModelKind { deSitter, antiDeSitter };
Vec4 ds_exp(const Vec4& x, const Vec4& v, double t);
Mat2 ads_exp(const Mat2& X, const Mat2& V, double t);

}  // namespace wick
