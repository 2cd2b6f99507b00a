#pragma once

#include "wick/rescale.hpp"

namespace wick {

Mat2 ads_bend(const Lamination& lam, const Vec3& x0, const Vec3& x);

enum class Side { left, right };
Vec3 earthquake(const Lamination& lam, const Vec3& x0, Side side, const Vec3& x);
// image of the lamination under the left earthquake, same weights
Lamination earthquake_image(const Lamination& lam, const Vec3& x0);
double earthquake_inverse_check(const Lamination& lam, const Vec3& x0, const Vec3& x, const Vec3& y);

struct BoundarySample {
    ProdPoint point;   // (xiL, xiR)
    double theta;      // ideal point of H^2 it comes from
    int face;
    bool gap_after = false;  // the arc to the next sample leaves the support
};
std::vector<BoundarySample> boundary_samples(const Domain& dom, int per_arc = 8);
// consecutive increments never both strictly opposite in sign
bool achronal(const std::vector<BoundarySample>& s, double tol = 1e-10);

// gamma acts on H^2 through so21; the lamination must be invariant
IsomPair ads_holonomy(const Domain& dom, const Mat2& gamma);
Mat2c hyperbolic_holonomy(const Domain& dom, const Mat2& gamma);
// unchecked versions on a scaled lamination t*lambda (used for spectral derivatives)
IsomPair ads_holonomy_scaled(const Lamination& lam, const Vec3& x0, const Mat2& gamma, double t);
Mat2c hyperbolic_holonomy_scaled(const Lamination& lam, const Vec3& x0, const Mat2& gamma, double t);

struct PastFrame {
    double tau;
    Mat2 rho_plus, rho_minus, point;
};
PastFrame past_frame(const Domain& dom, const Vec3& p);
double ads_time_distance(const Mat2& a, const Mat2& b);  // timelike distance along a geodesic of length <= pi/2

}  // namespace wick
