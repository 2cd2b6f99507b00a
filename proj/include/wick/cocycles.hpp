#pragma once

#include "wick/domain.hpp"

namespace wick {

// ordered product of exp(z a_i X_i / 2)
Mat2c factor_product(const std::vector<Crossing>& cr, cd z);

Mat2c quake_bend(const Lamination& lam, cd z, const Vec3& x, const Vec3& y);
Mat2c hyperbolic_bending(const Lamination& lam, const Vec3& x, const Vec3& y);  // z = i
IsomPair ads_cocycle(const Lamination& lam, const Vec3& x, const Vec3& y);       // (beta-, beta+)
Mat2 derivative_at_zero(const Lamination& lam, const Vec3& x, const Vec3& y);

// crossings from the basepoint to the stratum of a frame, band weights replaced
// by the fraction s of the leaf (and the outward boundary factor appended)
std::vector<Crossing> frame_crossings(const Domain& dom, const Frame& f);

// B^(x0, p) and its AdS counterpart
Mat2c lifted_from_base(const Domain& dom, const Vec3& p, cd z);
IsomPair lifted_ads_from_base(const Domain& dom, const Vec3& p);

Mat2c lifted(const Domain& dom, const Vec3& p, const Vec3& q, cd z);
IsomPair lifted_ads(const Domain& dom, const Vec3& p, const Vec3& q);

}  // namespace wick
