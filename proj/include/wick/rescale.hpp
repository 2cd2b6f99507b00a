#pragma once

#include <functional>

#include "wick/cocycles.hpp"

namespace wick {

enum class Kind { flat, hyperbolic, deSitter, antiDeSitter };
Kind parse_kind(const std::string& s);
std::string kind_name(Kind k);

struct Rescaling {
    double alpha, beta;
};
Rescaling rescaling(Kind kind, double T);

// the positive normal of the fixed H^2 inside H^3
inline Vec4 e3() { return {0, 0, 0, 1}; }
Vec4 act4(const Mat2c& A, const Vec4& x);

Vec4 bend_embed(const Domain& dom, const Vec3& x);
Vec4 wick_rotate(const Domain& dom, const Vec3& p);
Vec4 ds(const Domain& dom, const Vec3& p);
Mat2 ads(const Domain& dom, const Vec3& p);

struct ProjectivePoint {
    cd z;             // affine coordinate H01/H11 of the null line (infinite when H11 = 0)
    Vec3 sphere;      // the point of S^2 in the Klein picture
    bool at_infinity = false;
};
ProjectivePoint projective(const Domain& dom, const Vec3& p);
ProjectivePoint null_to_projective(const Vec4& v);
double sphere_distance(const Vec3& a, const Vec3& b);
Vec3 klein(const Vec4& v);  // (v1,v2,v3)/v0

// closed forms for lambda = (l0, a0), l0 = {x2 = 0}, basepoint on the side x2 < 0
Vec3 single_geodesic_flat(double a0, double T, double u, double zeta);
Vec4 single_geodesic_hyperbolic(double a0, double T, double u, double zeta);
Vec4 single_geodesic_ds(double a0, double T, double u, double zeta);
Mat2 single_geodesic_ads(double a0, double T, double u, double zeta);
Mat3 single_geodesic_metric(Kind kind, double a0, double T, double zeta);  // coordinates (T, zeta, u)
Lamination single_geodesic_lamination(double a0);

struct PullbackReport {
    Vec3 point;
    Kind kind;
    double h;
    double residual;
    Mat3 numeric, expected;
};
PullbackReport pullback_residual(const Domain& dom, const Vec3& p, Kind kind, double h = 1e-5, double margin = 1e-2);

// metric of a target model pulled back through f by central differences along the
// given frame vectors; g evaluates the ambient bilinear form, align fixes lifts
Mat3 numeric_pullback(const std::function<Eigen::VectorXd(const Vec3&)>& f, const Vec3& p, const Mat3& frame, double h,
                      const std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>& g);

}  // namespace wick
