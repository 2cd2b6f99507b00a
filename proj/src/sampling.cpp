#include "wick/sampling.hpp"

#include <cmath>

namespace wick {

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

Vec3 random_h2(Rng& rng, const Vec3& center, double radius) {
    // area-uniform in a disk of the given radius, then moved to center
    double u = uniform(rng, 0, 1);
    double r = std::acosh(1 + u * (std::cosh(radius) - 1));
    double phi = uniform(rng, 0, 2 * M_PI);
    return act(move_to(center), h2_polar(r, phi));
}

Mat2 random_sl2(Rng& rng, double scale) {
    Mat2 X;
    double a = uniform(rng, -scale, scale), b = uniform(rng, -scale, scale), c = uniform(rng, -scale, scale);
    X << a, b, c, -a;
    return mat_exp(X);
}

Lamination random_lamination(Rng& rng, int n, const Vec3& x0, double wmin, double wmax) {
    Lamination lam;
    int tries = 0;
    while ((int)lam.leaves.size() < n && tries++ < 100000) {
        double a = uniform(rng, 0, 2 * M_PI), b = uniform(rng, 0, 2 * M_PI);
        double gap = norm_angle(b - a);
        if (gap < 0.2 || gap > 2 * M_PI - 0.2) continue;
        Geodesic g = geodesic(a, b);
        if (std::abs(mink(x0, g.n)) < 0.05) continue;
        bool ok = true;
        for (const auto& l : lam.leaves)
            if (std::abs(mink(l.g.n, g.n)) < 1 + 1e-3) ok = false;
        if (ok) lam.leaves.push_back({g, uniform(rng, wmin, wmax)});
    }
    return lam;
}

DomainSample sample_domain(Rng& rng, const Domain& dom, double tmin, double tmax, double margin, double radius,
                           double band_fraction) {
    const auto& lam = dom.lam();
    for (;;) {
        double T = uniform(rng, tmin, tmax);
        if (!lam.leaves.empty() && uniform(rng, 0, 1) < band_fraction) {
            int i = std::uniform_int_distribution<int>(0, (int)lam.leaves.size() - 1)(rng);
            double t = uniform(rng, -radius, radius);
            double s = uniform(rng, margin, 1 - margin);
            Frame f;
            f.T = T;
            f.N = lam.leaves[i].g.point(t);
            if (!lam.in_support(f.N, 0)) continue;
            auto [rm, rp] = dom.rho_pm(i);
            f.r = s * rp + (1 - s) * rm;
            f.kind = Frame::Kind::Band;
            f.leaf = i;
            f.s = s;
            f.face = dom.near_face(i);
            return {dom.embed_band(i, t, T, s), f};
        }
        Vec3 x = random_h2(rng, dom.basepoint(), radius);
        if (!lam.in_support(x, margin)) continue;
        bool near = false;
        for (const auto& l : lam.leaves)
            if (std::abs(mink(x, l.g.n)) < margin) near = true;
        for (const auto& b : lam.boundary)
            if (mink(x, b.n) < margin) near = true;
        if (near) continue;
        Frame f;
        f.T = T;
        f.N = x;
        f.face = dom.face_of(x);
        f.r = dom.faces()[f.face].rho;
        return {dom.embed(x, T), f};
    }
}

}  // namespace wick
