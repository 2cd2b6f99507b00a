#include "wick/qd.hpp"

#include <cmath>

namespace wick::qd {

namespace {
void require_tau(Kind kind, double tau) {
    if (!(tau > 0)) throw Error("TimeRange", "tau must be positive");
    if (kind == Kind::hyperbolic && !(tau > 1)) throw Error("TimeRange", "hyperbolic development needs tau > 1");
    if (kind == Kind::deSitter && !(tau < 1)) throw Error("TimeRange", "de Sitter development needs tau < 1");
}
}  // namespace

Value develop(Kind kind, const Pi0Point& p) {
    require_tau(kind, p.tau);
    Value out{kind};
    double t = p.tau;
    switch (kind) {
        case Kind::flat:
            out.flat = {t * std::sinh(p.u), p.y, t * std::cosh(p.u)};
            break;
        case Kind::hyperbolic:
            out.w = std::exp(cd(p.u, p.y)) / t;
            out.c = std::sqrt(t * t - 1) / t * std::exp(p.u);
            out.v = halfspace_to_hyperboloid(out.w, out.c);
            break;
        case Kind::deSitter: {
            double d = std::atanh(t);
            Vec4 n(0, 0, std::cos(p.y), std::sin(p.y)), P(std::cosh(p.u), std::sinh(p.u), 0, 0);
            out.v = std::cosh(d) * n + std::sinh(d) * P;
            break;
        }
        case Kind::antiDeSitter: {
            double a = std::atan(t);
            Mat2 D, R;
            D << std::exp(-p.y), 0, 0, std::exp(p.y);
            R << 0, std::exp(p.u), -std::exp(-p.u), 0;
            out.m = std::cos(a) * D + std::sin(a) * R;
            break;
        }
    }
    return out;
}

Eigen::VectorXd as_vector(const Value& v) {
    switch (v.kind) {
        case Kind::flat: return v.flat;
        case Kind::hyperbolic:
        case Kind::deSitter: return v.v;
        case Kind::antiDeSitter: {
            Eigen::VectorXd x(4);
            x << v.m(0, 0), v.m(0, 1), v.m(1, 0), v.m(1, 1);
            return x;
        }
    }
    return {};
}

double ambient_form(Kind kind, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    switch (kind) {
        case Kind::flat: return -a[2] * b[2] + a[0] * b[0] + a[1] * b[1];
        case Kind::hyperbolic:
        case Kind::deSitter: return mink4(a, b);
        case Kind::antiDeSitter: {
            Mat2 A, B;
            A << a[0], a[1], a[2], a[3];
            B << b[0], b[1], b[2], b[3];
            return ads_form(A, B);
        }
    }
    return 0;
}

Mat3 metric(Kind kind, const Pi0Point& p) {
    require_tau(kind, p.tau);
    double t2 = p.tau * p.tau;
    if (kind == Kind::flat) return Eigen::Vector3d(t2, 1, -1).asDiagonal();
    auto r = rescaling(kind, p.tau);
    double sgn = kind == Kind::hyperbolic ? 1 : -1;
    return Eigen::Vector3d(r.alpha * t2, r.alpha, sgn * r.beta).asDiagonal();
}

Value Isom::apply(const Value& x) const {
    Value out = x;
    switch (kind) {
        case Kind::flat: out.flat = flat.apply(x.flat); break;
        case Kind::hyperbolic: {
            out.v = lorentz * x.v;
            auto [w, c] = hyperboloid_to_halfspace(out.v);
            out.w = w;
            out.c = c;
            break;
        }
        case Kind::deSitter: out.v = lorentz * x.v; break;
        case Kind::antiDeSitter: out.m = pair.apply(x.m); break;
    }
    return out;
}

Pi0Point translate(const Pi0Point& p, cd v, bool rotation) {
    Pi0Point q = p;
    if (rotation) {
        q.u = -q.u;
        q.y = -q.y;
    }
    q.u += v.real();
    q.y += v.imag();
    return q;
}

Isom holonomy(Kind kind, cd v, bool rotation) {
    double p = v.real(), q = v.imag();
    Isom out{kind};
    switch (kind) {
        case Kind::flat: {
            Mat3 B;
            B << std::cosh(p), 0, std::sinh(p), 0, 1, 0, std::sinh(p), 0, std::cosh(p);
            AffineIsom tr{B, Vec3(0, q, 0)};
            AffineIsom rot{Eigen::Vector3d(-1, -1, 1).asDiagonal(), Vec3::Zero()};
            out.flat = rotation ? tr * rot : tr;
            break;
        }
        case Kind::hyperbolic: {
            Mat2c A;
            A << std::exp(cd(p, q) / 2.0), 0, 0, std::exp(-cd(p, q) / 2.0);
            Mat2c R;  // w -> 1/w on the boundary
            R << 0, cd(0, 1), cd(0, 1), 0;
            out.lorentz = so31(rotation ? Mat2c(A * R) : A);
            break;
        }
        case Kind::deSitter: {
            Mat4 L = Mat4::Identity();
            L.block<2, 2>(0, 0) << std::cosh(p), std::sinh(p), std::sinh(p), std::cosh(p);
            L.block<2, 2>(2, 2) << std::cos(q), -std::sin(q), std::sin(q), std::cos(q);
            Mat4 R = Eigen::Vector4d(1, -1, 1, -1).asDiagonal();
            out.lorentz = rotation ? Mat4(L * R) : L;
            break;
        }
        case Kind::antiDeSitter: {
            Mat2 A, B, J;
            A << std::exp((p - q) / 2), 0, 0, std::exp(-(p - q) / 2);
            B << std::exp((p + q) / 2), 0, 0, std::exp(-(p + q) / 2);
            J << 0, 1, -1, 0;
            IsomPair tr{A, B}, rot{J, J};
            out.pair = rotation ? tr * rot : tr;
            break;
        }
    }
    return out;
}

double kerr_r_squared(const KerrParams& k, double tau) {
    double t2 = tau * tau;
    return (t2 * k.r_plus * k.r_plus + k.r_minus * k.r_minus) / (1 + t2);
}

Pi0Point kerr_chart(const KerrParams& k, double r, double phi, double v) {
    if (!(k.r_plus > k.r_minus && k.r_minus >= 0)) throw Error("RadiusRange", "need r+ > r- >= 0");
    if (!(r > k.r_minus && r < k.r_plus)) throw Error("RadiusRange", "r must lie in (r-, r+)");
    double r2 = r * r, rp2 = k.r_plus * k.r_plus, rm2 = k.r_minus * k.r_minus;
    // split-complex product (r+ + j r-)(phi + j v) with j^2 = 1, signs fixed by the Kerr form
    return {k.r_plus * phi - k.r_minus * v, k.r_plus * v - k.r_minus * phi, std::sqrt((r2 - rm2) / (rp2 - r2))};
}

KerrCoefficients kerr_metric(const KerrParams& k, double r) {
    double J = k.J();
    return {-k.M() + r * r + J * J / (4 * r * r), -J / (2 * r * r)};
}

Mat3 kerr_metric_matrix(const KerrParams& k, double r) {
    auto [f, nphi] = kerr_metric(k, r);
    double r2 = r * r;
    Mat3 g = Mat3::Zero();
    g(0, 0) = 1 / f;
    g(1, 1) = r2;
    g(1, 2) = g(2, 1) = r2 * nphi;
    g(2, 2) = -f + r2 * nphi * nphi;
    return g;
}

namespace {
// (exp(s z) - 1) / s without cancellation for small s
cd expm1_over(cd z, double s) {
    double th = s * z.imag();
    cd eith_m1(-2 * std::pow(std::sin(th / 2), 2), std::sin(th));
    return (std::expm1(s * z.real()) * std::polar(1.0, th) + eith_m1) / s;
}
}  // namespace

std::pair<cd, double> ray(double s, const Pi0Point& p) {
    if (!(s > 0)) throw Error("TimeRange", "s must be positive");
    if (!(p.tau > 0)) throw Error("TimeRange", "tau must be positive");
    return {expm1_over(cd(p.u, p.y), s), std::exp(s * p.u) * p.tau};
}

std::pair<cd, double> ray_holonomy(double s, cd v, std::pair<cd, double> wc) {
    cd e = std::exp(s * v);
    return {e * wc.first + expm1_over(v, s), std::abs(e) * wc.second};
}

LatticeClass lattice_check(const std::vector<cd>& g, bool rotation) {
    LatticeClass out;
    out.rotation = rotation;
    if (g.empty() || g.size() > 2) throw Error("DegenerateLattice", "need one or two generators");
    for (cd v : g)
        if (std::abs(v) < 1e-14) throw Error("DegenerateLattice", "zero translation");
    if (g.size() == 1) {
        double b = std::arg(g[0]);
        out.a = std::polar(std::abs(g[0]), 2 * b);
        return out;
    }
    double cross = g[0].real() * g[1].imag() - g[0].imag() * g[1].real();
    if (std::abs(cross) < 1e-12 * std::abs(g[0]) * std::abs(g[1]))
        throw Error("DegenerateLattice", "generators are linearly dependent over the reals");
    out.torus = true;
    out.modulus = g[1] / g[0];
    if (out.modulus.imag() < 0) out.modulus = -out.modulus;
    return out;
}

}  // namespace wick::qd
