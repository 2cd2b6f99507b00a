#include "wick/ads.hpp"

#include <algorithm>
#include <cmath>

namespace wick {

Mat2 ads_bend(const Lamination& lam, const Vec3& x0, const Vec3& x) {
    IsomPair b = ads_cocycle(lam, x0, x);
    return proj_normalize(b.apply(pi_rotation(x)));
}

Vec3 earthquake(const Lamination& lam, const Vec3& x0, Side side, const Vec3& x) {
    IsomPair b = ads_cocycle(lam, x0, x);
    return act(side == Side::left ? b.right : b.left, x);
}

Lamination earthquake_image(const Lamination& lam, const Vec3& x0) {
    Lamination out;
    for (const auto& l : lam.leaves) {
        // beta+ up to the foot: its last factor translates along l, so l goes rigidly
        Mat2 b = ads_cocycle(lam, x0, l.g.foot()).right;
        out.leaves.push_back({geodesic_from_normal(act(b, l.g.n)), l.weight});
    }
    for (const auto& g : lam.boundary) {
        Mat2 b = ads_cocycle(lam, x0, g.foot()).right;
        out.boundary.push_back(geodesic_from_normal(act(b, g.n)));
    }
    return out;
}

double earthquake_inverse_check(const Lamination& lam, const Vec3& x0, const Vec3& x, const Vec3& y) {
    Lamination img = earthquake_image(lam, x0);
    Vec3 ex = earthquake(lam, x0, Side::left, x), ey = earthquake(lam, x0, Side::left, y);
    Mat2 left = ads_cocycle(img, ex, ey).left;
    // E_L normalized at x0 rather than x: the source cocycle is seen through A = beta+(x0,x)
    Mat2 A = ads_cocycle(lam, x0, x).right;
    Mat2 right = A * ads_cocycle(lam, x, y).right * A.inverse();
    return proj_dist(Mat2(left * right), Mat2(Mat2::Identity()));
}

std::vector<BoundarySample> boundary_samples(const Domain& dom, int per_arc) {
    const auto& lam = dom.lam();
    std::vector<BoundarySample> out;
    const auto& faces = dom.faces();
    for (size_t k = 0; k < faces.size(); ++k) {
        for (auto [a, len] : faces[k].arcs) {
            // a point of the face near the middle of the arc
            Vec3 x0 = dom.basepoint();
            Vec3 xi = ideal(a + len / 2);
            Vec3 dir = xi / -mink(xi, x0) - x0;  // tangent at x0 towards xi
            dir /= std::sqrt(mink(dir, dir));
            Vec3 z = x0;
            for (double t = 0.5; t < 40; t += 0.5) {
                z = std::cosh(t) * x0 + std::sinh(t) * dir;
                if (dom.face_of(z) == (int)k) break;
            }
            IsomPair b = ads_cocycle(lam, x0, z);
            for (int j = 0; j <= per_arc + 1; ++j) {
                double th = a + len * j / (per_arc + 1);
                Vec2 v = ideal_vec(th);
                out.push_back({{vec_angle(b.left * v), vec_angle(b.right * v)}, norm_angle(th), (int)k, false});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.theta < q.theta; });
    // drop duplicated vertices shared by adjacent arcs of the same face
    std::vector<BoundarySample> uniq;
    for (const auto& s : out) {
        if (!uniq.empty() && std::abs(uniq.back().theta - s.theta) < 1e-12 &&
            std::abs(uniq.back().point.first - s.point.first) < 1e-12 &&
            std::abs(uniq.back().point.second - s.point.second) < 1e-12)
            continue;
        uniq.push_back(s);
    }
    for (size_t i = 0; i < uniq.size(); ++i) {
        double t0 = uniq[i].theta, t1 = i + 1 < uniq.size() ? uniq[i + 1].theta : uniq[0].theta + 2 * M_PI;
        double mid = 0.5 * (t0 + t1);
        if (t1 - t0 > 1e-12 && !lam.in_support(ideal(mid), 1e-12)) uniq[i].gap_after = true;
    }
    return uniq;
}

namespace {
double signed_step(double a, double b) {
    double d = std::fmod(b - a, 2 * M_PI);
    if (d > M_PI) d -= 2 * M_PI;
    if (d <= -M_PI) d += 2 * M_PI;
    return d;
}
}  // namespace

bool achronal(const std::vector<BoundarySample>& s, double tol) {
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].gap_after) continue;
        double dl = signed_step(s[i].point.first, s[i + 1].point.first);
        double dr = signed_step(s[i].point.second, s[i + 1].point.second);
        if (dl * dr < -tol) return false;
    }
    return true;
}

namespace {
void require_invariant(const Domain& dom, const Mat2& gamma) {
    if (!is_invariant(dom.lam(), so21(gamma))) throw Error("NotInvariant", "lamination is not invariant under gamma");
    if (dom.face_of(act(gamma, dom.basepoint())) < 0)
        throw Error("ImageOnLeaf", "gamma moves the basepoint onto a leaf");
}
}  // namespace

IsomPair ads_holonomy_scaled(const Lamination& lam, const Vec3& x0, const Mat2& gamma, double t) {
    auto cr = crossing_data(lam, x0, act(gamma, x0));
    return {Mat2(factor_product(cr, -t).real() * gamma), Mat2(factor_product(cr, t).real() * gamma)};
}

Mat2c hyperbolic_holonomy_scaled(const Lamination& lam, const Vec3& x0, const Mat2& gamma, double t) {
    auto cr = crossing_data(lam, x0, act(gamma, x0));
    return factor_product(cr, cd(0, t)) * to_c(gamma);
}

IsomPair ads_holonomy(const Domain& dom, const Mat2& gamma) {
    require_invariant(dom, gamma);
    return ads_holonomy_scaled(dom.lam(), dom.basepoint(), gamma, 1.0);
}

Mat2c hyperbolic_holonomy(const Domain& dom, const Mat2& gamma) {
    require_invariant(dom, gamma);
    return hyperbolic_holonomy_scaled(dom.lam(), dom.basepoint(), gamma, 1.0);
}

double ads_time_distance(const Mat2& a, const Mat2& b) {
    return std::acos(std::min(1.0, std::abs(ads_form(a, b))));
}

PastFrame past_frame(const Domain& dom, const Vec3& p) {
    Frame f = dom.ct_frame(p);
    auto cr = frame_crossings(dom, f);
    Mat2 bm = factor_product(cr, -1.0).real(), bp = factor_product(cr, 1.0).real();
    PastFrame out;
    out.tau = std::atan(f.T);
    out.rho_minus = proj_normalize(Mat2(bm * bp.inverse()));
    out.rho_plus = proj_normalize(Mat2(bm * pi_rotation(f.N) * bp.inverse()));
    out.point = ads(dom, p);
    return out;
}

}  // namespace wick
