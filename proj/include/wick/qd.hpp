#pragma once

#include <optional>

#include "wick/rescale.hpp"

namespace wick::qd {

struct Pi0Point {
    double u = 0, y = 0, tau = 1;
};

// a developed point; only the field of the matching kind is meaningful
struct Value {
    Kind kind;
    Vec3 flat = Vec3::Zero();  // (x, y, t)
    Vec4 v = Vec4::Zero();     // hyperboloid or de Sitter vector
    Mat2 m = Mat2::Identity(); // AdS point
    cd w = 0;                  // half-space coordinates (hyperbolic)
    double c = 0;
};

Value develop(Kind kind, const Pi0Point& p);
Eigen::VectorXd as_vector(const Value& v);  // for numeric pullbacks
double ambient_form(Kind kind, const Eigen::VectorXd& a, const Eigen::VectorXd& b);
// closed form g_kappa in coordinates (u, y, tau)
Mat3 metric(Kind kind, const Pi0Point& p);

struct Isom {
    Kind kind;
    AffineIsom flat;                 // acting on (x, y, t)
    Mat4 lorentz = Mat4::Identity(); // hyperbolic and de Sitter
    IsomPair pair;                   // AdS
    Value apply(const Value& x) const;
};
// translation sigma_v, v = p + iq, optionally composed with the pi-rotation (u,y) -> (-u,-y)
Isom holonomy(Kind kind, cd v, bool rotation = false);
Pi0Point translate(const Pi0Point& p, cd v, bool rotation = false);

struct KerrParams {
    double r_plus, r_minus;
    double M() const { return r_plus * r_plus + r_minus * r_minus; }
    double J() const { return 2 * r_plus * r_minus; }
};
Pi0Point kerr_chart(const KerrParams& k, double r, double phi, double v);
struct KerrCoefficients {
    double f, n_phi;
};
KerrCoefficients kerr_metric(const KerrParams& k, double r);
Mat3 kerr_metric_matrix(const KerrParams& k, double r);  // coordinates (r, phi, v)
double kerr_r_squared(const KerrParams& k, double tau);

// s-family of hyperbolic developing maps (w, c) and its holonomy
std::pair<cd, double> ray(double s, const Pi0Point& p);
std::pair<cd, double> ray_holonomy(double s, cd v, std::pair<cd, double> wc);

struct LatticeClass {
    bool torus = false;
    cd a;        // cylinder: a = |v| e^{2 i beta}
    cd modulus;  // torus: v2 / v1 moved to the upper half plane
    bool rotation = false;
};
LatticeClass lattice_check(const std::vector<cd>& gens, bool rotation = false);

}  // namespace wick::qd
