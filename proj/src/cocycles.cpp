#include "wick/cocycles.hpp"

namespace wick {

Mat2c factor_product(const std::vector<Crossing>& cr, cd z) {
    Mat2c P = Mat2c::Identity();
    for (const auto& c : cr) {
        P = P * mat_exp(Mat2c(z * (0.5 * c.weight) * to_c(c.X)));
        P /= std::sqrt(P.determinant());
    }
    return P;
}

Mat2c quake_bend(const Lamination& lam, cd z, const Vec3& x, const Vec3& y) {
    return factor_product(crossing_data(lam, x, y), z);
}

Mat2c hyperbolic_bending(const Lamination& lam, const Vec3& x, const Vec3& y) {
    return quake_bend(lam, cd(0, 1), x, y);
}

IsomPair ads_cocycle(const Lamination& lam, const Vec3& x, const Vec3& y) {
    auto cr = crossing_data(lam, x, y);
    return {factor_product(cr, -1.0).real(), factor_product(cr, 1.0).real()};
}

Mat2 derivative_at_zero(const Lamination& lam, const Vec3& x, const Vec3& y) {
    Mat2 D = Mat2::Zero();
    for (const auto& c : crossing_data(lam, x, y)) D += 0.5 * c.weight * c.X;
    return D;
}

std::vector<Crossing> frame_crossings(const Domain& dom, const Frame& f) {
    const auto& lam = dom.lam();
    auto cr = crossing_data(lam, dom.basepoint(), f.N);
    const auto& face = dom.faces()[f.face];
    const auto& base = dom.faces()[dom.base_face()];
    bool band = f.kind == Frame::Kind::Band;
    if (band)  // N sits on the band leaf up to rounding; the band factor always closes the product
        std::erase_if(cr, [&](const Crossing& c) { return c.leaf == f.leaf; });
    for (auto& c : cr) {
        bool on_leaf = std::abs(mink(f.N, lam.leaves[c.leaf].g.n)) <= 1e-12 * std::max(1.0, f.N[0]);
        // N on the closure of a face: the leaf counts iff the face lies beyond it
        if (on_leaf) c.weight = face.sign[c.leaf] != base.sign[c.leaf] ? lam.leaves[c.leaf].weight : 0.0;
    }
    if (band) {
        Vec3 n = dom.leaf_normal(f.leaf);
        cr.push_back({f.leaf, n, mink_to_sl2(n), f.s * lam.leaves[f.leaf].weight, 1.0});
    }
    if (f.kind == Frame::Kind::BoundaryBand && f.s > 0) {
        Vec3 out = -lam.boundary[f.leaf].n;
        cr.push_back({-1, out, mink_to_sl2(out), f.s, 1.0});
    }
    return cr;
}

Mat2c lifted_from_base(const Domain& dom, const Vec3& p, cd z) {
    return factor_product(frame_crossings(dom, dom.ct_frame(p)), z);
}

IsomPair lifted_ads_from_base(const Domain& dom, const Vec3& p) {
    auto cr = frame_crossings(dom, dom.ct_frame(p));
    return {factor_product(cr, -1.0).real(), factor_product(cr, 1.0).real()};
}

Mat2c lifted(const Domain& dom, const Vec3& p, const Vec3& q, cd z) {
    return lifted_from_base(dom, p, z).inverse() * lifted_from_base(dom, q, z);
}

IsomPair lifted_ads(const Domain& dom, const Vec3& p, const Vec3& q) {
    IsomPair a = lifted_ads_from_base(dom, p), b = lifted_ads_from_base(dom, q);
    return {a.left.inverse() * b.left, a.right.inverse() * b.right};
}

}  // namespace wick
