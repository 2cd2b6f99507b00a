#include "wick/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wick {

namespace {
SuiteResult finish(std::string name, double value, double tolerance, long samples, std::string detail = "") {
    return {std::move(name), value, tolerance, samples, value <= tolerance, std::move(detail)};
}

Vec3 random_unit(Rng& rng) {
    std::normal_distribution<double> g;
    Vec3 w(g(rng), g(rng), g(rng));
    return w.normalized();
}

// a point of H^2 at least `margin` away (in |<x,n>|) from every leaf, inside the support
Vec3 random_off_leaves(Rng& rng, const Lamination& lam, const Vec3& c, double radius, double margin) {
    for (;;) {
        Vec3 x = random_h2(rng, c, radius);
        if (!lam.in_support(x, margin)) continue;
        bool ok = true;
        for (const auto& l : lam.leaves)
            if (std::abs(mink(x, l.g.n)) < margin) ok = false;
        if (ok) return x;
    }
}

std::pair<double, double> time_range(Kind kind) {
    switch (kind) {
        case Kind::hyperbolic: return {1.1, 4.0};
        case Kind::deSitter: return {0.1, 0.9};
        default: return {0.1, 4.0};
    }
}

// spacelike distance between AdS points on a common totally geodesic plane
double ads_space_distance(const Mat2& a, Mat2 b) {
    if ((a - b).norm() > (a + b).norm()) b = -b;
    Mat2 d = a - b;
    return 2 * std::asinh(std::sqrt(std::max(0.0, ads_form(d, d))) / 2);
}
}  // namespace

SuiteResult fail_with(const std::string& name, double tolerance, const std::exception& e) {
    return {name, INFINITY, tolerance, 0, false, e.what()};
}

SuiteResult verify_decomposition(const Domain& dom, Rng& rng, int samples) {
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        auto s = sample_domain(rng, dom, 0.2, 4.0);
        Frame f = dom.ct_frame(s.p);
        double e = std::max({std::abs(f.T - s.expected.T), (f.N - s.expected.N).norm(), (f.r - s.expected.r).norm()});
        worst = std::max(worst, e);
    }
    return finish("decomposition", worst, tol::decomposition, samples);
}

SuiteResult verify_gradient(const Domain& dom, Rng& rng, int samples, double h) {
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        auto s = sample_domain(rng, dom, 0.2, 4.0);
        Vec3 w = random_unit(rng);
        double fd = (dom.ct_frame(s.p + h * w).T - dom.ct_frame(s.p - h * w).T) / (2 * h);
        Frame f = dom.ct_frame(s.p);
        double exact = mink(Vec3(-(s.p - f.r) / f.T), w);
        worst = std::max(worst, std::abs(fd - exact));
    }
    return finish("gradient", worst, tol::gradient, samples);
}

SuiteResult verify_fundamental(const Domain& dom, Rng& rng, int pairs) {
    double worst = -INFINITY;
    for (int i = 0; i < pairs; ++i) {
        Frame a = dom.ct_frame(sample_domain(rng, dom, 0.2, 4.0).p);
        Frame b = dom.ct_frame(sample_domain(rng, dom, 0.2, 4.0).p);
        worst = std::max({worst, mink(a.N, b.r - a.r), mink(b.N, a.r - b.r)});
    }
    return finish("fundamental-inequality", std::max(worst, 0.0), tol::fundamental, pairs);
}

SuiteResult verify_monotone(const Domain& dom, Rng& rng, int pairs) {
    double worst = 0;
    for (int i = 0; i < pairs; ++i) {
        Frame a = dom.ct_frame(sample_domain(rng, dom, 0.2, 4.0).p);
        Frame b = dom.ct_frame(sample_domain(rng, dom, 0.2, 4.0).p);
        worst = std::max(worst, -mink(a.N - b.N, a.r - b.r));
    }
    return finish("monotone-pair", worst, tol::fundamental, pairs);
}

SuiteResult verify_cocycle(const Lamination& lam, Rng& rng, int triples, cd z) {
    double worst = 0;
    Vec3 o(1, 0, 0);
    for (int i = 0; i < triples; ++i) {
        Vec3 x = random_off_leaves(rng, lam, o, 3.0, 1e-6), y = random_off_leaves(rng, lam, o, 3.0, 1e-6),
             w = random_off_leaves(rng, lam, o, 3.0, 1e-6);
        Mat2c lhs = quake_bend(lam, z, x, y) * quake_bend(lam, z, y, w);
        worst = std::max(worst, proj_dist(lhs, quake_bend(lam, z, x, w)));
    }
    std::ostringstream os;
    os << "z=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return finish("cocycle", worst, tol::cocycle, triples, os.str());
}

SuiteResult verify_derivative(const Lamination& lam, Rng& rng, int pairs, double h) {
    double worst = 0;
    Vec3 o(1, 0, 0);
    for (int i = 0; i < pairs; ++i) {
        Vec3 x = random_off_leaves(rng, lam, o, 3.0, 1e-6), y = random_off_leaves(rng, lam, o, 3.0, 1e-6);
        Mat2c fd = (quake_bend(lam, h, x, y) - quake_bend(lam, -h, x, y)) / (2 * h);
        worst = std::max(worst, (fd - to_c(derivative_at_zero(lam, x, y))).norm());
    }
    return finish("derivative-at-zero", worst, tol::derivative, pairs);
}

SuiteResult verify_pullback(const Domain& dom, Kind kind, Rng& rng, int samples, double h, double margin) {
    auto [t0, t1] = time_range(kind);
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        auto s = sample_domain(rng, dom, t0, t1, margin);
        worst = std::max(worst, pullback_residual(dom, s.p, kind, h, margin).residual);
    }
    return finish("pullback-" + kind_name(kind), worst, tol::pullback, samples);
}

SuiteResult verify_pullback_near_band(const Domain& dom, Kind kind, Rng& rng, int samples, double h, double margin) {
    const auto& lam = dom.lam();
    if (lam.leaves.empty()) return finish("pullback-near-band-" + kind_name(kind), 0, tol::pullback_near_band, 0, "no bands");
    double t0 = kind == Kind::hyperbolic ? 1.01 : 0.1, t1 = kind == Kind::deSitter ? 0.95 : 3.0;
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
        int i = std::uniform_int_distribution<int>(0, (int)lam.leaves.size() - 1)(rng);
        double T = uniform(rng, t0, t1), t = uniform(rng, -1.5, 1.5);
        double d = uniform(rng, margin, 2 * margin);
        Vec3 p;
        switch (k % 3) {
            case 0: p = dom.embed_band(i, t, T, d); break;
            case 1: p = dom.embed_band(i, t, T, 1 - d); break;
            default: {  // just outside the band, on the far face
                Vec3 x = lam.leaves[i].g.point(t);
                Vec3 n = dom.leaf_normal(i);
                Vec3 y = std::cosh(2 * d) * x + std::sinh(2 * d) * n;
                if (dom.face_of(y) < 0) continue;
                p = dom.embed(y, T);
            }
        }
        if (!dom.lam().in_support(dom.ct_frame(p).N, 0)) continue;
        worst = std::max(worst, pullback_residual(dom, p, kind, h, margin).residual);
    }
    return finish("pullback-near-band-" + kind_name(kind), worst, tol::pullback_near_band, samples);
}

SuiteResult verify_completion(const Domain& dom, Rng& rng, int lines) {
    double worst = 0;
    for (int i = 0; i < lines; ++i) {
        auto s = sample_domain(rng, dom, 1.0, 1.0);
        Vec4 base = bend_embed(dom, s.expected.N);
        for (double T : {1.05, 1.5, 3.0, 10.0}) {
            Vec3 p = s.expected.r + T * s.expected.N;
            double d = h3_distance(wick_rotate(dom, p), base);
            worst = std::max(worst, std::abs(d - std::atanh(1 / T)));
        }
    }
    return finish("completion-distance", worst, tol::completion, lines);
}

SuiteResult verify_klein(const Domain& dom, Rng& rng, int lines, double eps) {
    double worst = 0;
    for (int i = 0; i < lines; ++i) {
        auto s = sample_domain(rng, dom, 1.0, 1.0);
        Vec3 ph = s.expected.r + (1 + eps) * s.expected.N, pd = s.expected.r + (1 - eps) * s.expected.N;
        worst = std::max(worst, (klein(wick_rotate(dom, ph)) - klein(ds(dom, pd))).norm());
    }
    std::ostringstream os;
    os << "T = 1 +- " << eps;
    return finish("klein-fit", worst, tol::klein, lines, os.str());
}

SuiteResult verify_earthquake(const Lamination& lam, const Vec3& x0, Rng& rng, int pairs) {
    double worst = 0;
    for (int i = 0; i < pairs; ++i) {
        Vec3 x = random_off_leaves(rng, lam, x0, 3.0, 1e-6), y = random_off_leaves(rng, lam, x0, 3.0, 1e-6);
        worst = std::max(worst, earthquake_inverse_check(lam, x0, x, y));
    }
    return finish("earthquake-inverse", worst, tol::earthquake, pairs);
}

SuiteResult verify_ads_length(const Lamination& lam, const Vec3& x0, Rng& rng, int polylines, int points) {
    double worst = 0;
    for (int k = 0; k < polylines; ++k) {
        Vec3 x, y;
        for (int tries = 0; tries < 200; ++tries) {
            x = random_off_leaves(rng, lam, x0, 2.5, 1e-6);
            y = random_off_leaves(rng, lam, x0, 2.5, 1e-6);
            if (!crossing_data(lam, x, y).empty()) break;
        }
        double L = h2_distance(x, y);
        Vec3 u = (y - std::cosh(L) * x) / std::sinh(L);  // unit tangent at x towards y
        std::vector<double> ts;
        for (int j = 0; j <= points; ++j) ts.push_back(L * j / points);
        for (const auto& l : lam.leaves) {
            double a = mink(x, l.g.n), b = mink(u, l.g.n);
            if (std::abs(b) < 1e-300) continue;
            double th = -a / b;
            if (std::abs(th) < 1) {
                double t = std::atanh(th);
                if (t > 0 && t < L) ts.push_back(t);
            }
        }
        std::sort(ts.begin(), ts.end());
        double lh = 0, la = 0;
        Vec3 prev = x;
        Mat2 prev_img = ads_bend(lam, x0, x);
        for (size_t j = 1; j < ts.size(); ++j) {
            Vec3 q = std::cosh(ts[j]) * x + std::sinh(ts[j]) * u;
            Mat2 img = ads_bend(lam, x0, q);
            lh += h2_distance(prev, q);
            la += ads_space_distance(prev_img, img);
            prev = q;
            prev_img = img;
        }
        if (lh > 0) worst = std::max(worst, std::abs(la - lh) / lh);
    }
    return finish("ads-bend-length", worst, tol::ads_length, polylines);
}

namespace {
struct SgPoint {
    double a0, T, u, zeta;
};
SgPoint random_sg(Rng& rng, int branch, double tmin, double tmax) {
    SgPoint p;
    p.a0 = uniform(rng, 0.2, 1.5);
    p.T = uniform(rng, tmin, tmax);
    p.u = uniform(rng, -1.5, 1.5);
    double w = p.a0 / p.T;
    if (branch == 0) p.zeta = uniform(rng, -1.5, -0.01);
    else if (branch == 1) p.zeta = uniform(rng, 0.01 * w, 0.99 * w);
    else p.zeta = w + uniform(rng, 0.01, 1.5);
    return p;
}
}  // namespace

SuiteResult verify_single_geodesic(Rng& rng, int per_branch) {
    double worst = 0;
    const Vec3 x0(std::sqrt(2.0), 0, -1);
    for (int branch = 0; branch < 3; ++branch) {
        for (int i = 0; i < per_branch; ++i) {
            for (Kind kind : {Kind::flat, Kind::hyperbolic, Kind::deSitter, Kind::antiDeSitter}) {
                auto [t0, t1] = time_range(kind);
                auto s = random_sg(rng, branch, t0, t1);
                Domain dom(single_geodesic_lamination(s.a0), x0);
                Vec3 p = single_geodesic_flat(s.a0, s.T, s.u, s.zeta);
                double e = 0;
                switch (kind) {
                    case Kind::flat: {
                        Frame f = dom.ct_frame(p);
                        e = std::abs(f.T - s.T);
                        break;
                    }
                    case Kind::hyperbolic:
                        e = (wick_rotate(dom, p) - single_geodesic_hyperbolic(s.a0, s.T, s.u, s.zeta)).norm();
                        break;
                    case Kind::deSitter:
                        e = (ds(dom, p) - single_geodesic_ds(s.a0, s.T, s.u, s.zeta)).norm();
                        break;
                    case Kind::antiDeSitter:
                        e = proj_dist(ads(dom, p), single_geodesic_ads(s.a0, s.T, s.u, s.zeta));
                        break;
                }
                worst = std::max(worst, e);
            }
        }
    }
    return finish("single-geodesic", worst, tol::single_geodesic, 3L * per_branch * 4);
}

SuiteResult verify_gluing(double a0) {
    // one-sided second-order derivatives on either side of zeta = 0 and zeta = a0/T
    double worst_val = 0, worst_der = 0;
    const double h = 1e-5;
    for (Kind kind : {Kind::flat, Kind::hyperbolic, Kind::deSitter, Kind::antiDeSitter}) {
        auto [t0, t1] = time_range(kind);
        for (double T : {t0 + 0.05, 0.5 * (t0 + t1), t1 - 0.05}) {
            auto F = [&](double TT, double u, double z) -> Eigen::VectorXd {
                switch (kind) {
                    case Kind::flat: return single_geodesic_flat(a0, TT, u, z);
                    case Kind::hyperbolic: return single_geodesic_hyperbolic(a0, TT, u, z);
                    case Kind::deSitter: return single_geodesic_ds(a0, TT, u, z);
                    case Kind::antiDeSitter: {
                        Mat2 m = single_geodesic_ads(a0, TT, u, z);
                        Eigen::VectorXd v(4);
                        v << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
                        return v;
                    }
                }
                return {};
            };
            double u = 0.37;
            for (double z0 : {0.0, a0 / T}) {
                Eigen::VectorXd c = F(T, u, z0);
                auto G = [&](double TT, double uu, double z) {
                    Eigen::VectorXd v = F(TT, uu, z);
                    return (v - c).norm() <= (v + c).norm() ? v : Eigen::VectorXd(-v);
                };
                worst_val = std::max(worst_val, (G(T, u, z0 - 1e-13) - c).norm());
                // zeta direction
                Eigen::VectorXd left = (3 * c - 4 * G(T, u, z0 - h) + G(T, u, z0 - 2 * h)) / (2 * h);
                Eigen::VectorXd right = (-3 * c + 4 * G(T, u, z0 + h) - G(T, u, z0 + 2 * h)) / (2 * h);
                worst_der = std::max(worst_der, (left - right).norm() / std::max({1.0, left.norm(), right.norm()}));
                // T direction across the moving edge zeta = a0/T (flat: the middle branch
                // is entered from below in T); harmless at zeta = 0
                Eigen::VectorXd tl = (3 * c - 4 * G(T - h, u, z0) + G(T - 2 * h, u, z0)) / (2 * h);
                Eigen::VectorXd tr = (-3 * c + 4 * G(T + h, u, z0) - G(T + 2 * h, u, z0)) / (2 * h);
                worst_der = std::max(worst_der, (tl - tr).norm() / std::max({1.0, tl.norm(), tr.norm()}));
            }
        }
    }
    std::ostringstream os;
    os << "values " << worst_val << ", derivatives " << worst_der;
    // second-order one-sided stencils: O(h^2) truncation on each side, relative to the derivative size
    return finish("branch-gluing", std::max(worst_val, worst_der), tol::gluing, 24, os.str());
}

}  // namespace wick
