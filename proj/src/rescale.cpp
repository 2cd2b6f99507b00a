#include "wick/rescale.hpp"

#include <cmath>

namespace wick {

Kind parse_kind(const std::string& s) {
    if (s == "flat") return Kind::flat;
    if (s == "hyperbolic") return Kind::hyperbolic;
    if (s == "desitter" || s == "deSitter" || s == "ds") return Kind::deSitter;
    if (s == "antidesitter" || s == "antiDeSitter" || s == "ads") return Kind::antiDeSitter;
    throw Error("BadKind", "unknown kind '" + s + "'");
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::flat: return "flat";
        case Kind::hyperbolic: return "hyperbolic";
        case Kind::deSitter: return "desitter";
        case Kind::antiDeSitter: return "antidesitter";
    }
    return "?";
}

Rescaling rescaling(Kind kind, double T) {
    double a = 0;
    switch (kind) {
        case Kind::flat:
            if (!(T > 0)) throw Error("DomainOfT", "T must be positive");
            return {1, 1};
        case Kind::hyperbolic:
            if (!(T > 1)) throw Error("DomainOfT", "hyperbolic rescaling needs T > 1");
            a = 1 / (T * T - 1);
            break;
        case Kind::deSitter:
            if (!(T > 0 && T < 1)) throw Error("DomainOfT", "de Sitter rescaling needs 0 < T < 1");
            a = 1 / (1 - T * T);
            break;
        case Kind::antiDeSitter:
            if (!(T > 0)) throw Error("DomainOfT", "AdS rescaling needs T > 0");
            a = 1 / (1 + T * T);
            break;
    }
    return {a, a * a};
}

Vec4 act4(const Mat2c& A, const Vec4& x) { return from_herm(A * herm(x) * A.adjoint()); }

Vec4 bend_embed(const Domain& dom, const Vec3& x) {
    return act4(hyperbolic_bending(dom.lam(), dom.basepoint(), x), embed4(x));
}

namespace {
const cd kI(0, 1);

struct Lift {
    Frame f;
    std::vector<Crossing> cr;
};
Lift lift(const Domain& dom, const Vec3& p) {
    Lift l{dom.ct_frame(p), {}};
    l.cr = frame_crossings(dom, l.f);
    return l;
}
}  // namespace

Vec4 wick_rotate(const Domain& dom, const Vec3& p) {
    auto l = lift(dom, p);
    if (!(l.f.T > 1)) throw Error("TimeNotAboveOne", "wick rotation needs T > 1");
    double d = std::atanh(1 / l.f.T);
    return act4(factor_product(l.cr, kI), std::cosh(d) * embed4(l.f.N) + std::sinh(d) * e3());
}

Vec4 ds(const Domain& dom, const Vec3& p) {
    auto l = lift(dom, p);
    if (!(l.f.T < 1)) throw Error("TimeNotBelowOne", "de Sitter rescaling needs T < 1");
    double t = std::atanh(l.f.T);
    return ds_normalize(act4(factor_product(l.cr, kI), std::cosh(t) * e3() + std::sinh(t) * embed4(l.f.N)));
}

Mat2 ads(const Domain& dom, const Vec3& p) {
    auto l = lift(dom, p);
    double t = std::atan(l.f.T);
    Mat2 bm = factor_product(l.cr, -1.0).real(), bp = factor_product(l.cr, 1.0).real();
    Mat2 x = std::cos(t) * Mat2::Identity() + std::sin(t) * pi_rotation(l.f.N);
    return proj_normalize(Mat2(bm * x * bp.inverse()));
}

ProjectivePoint null_to_projective(const Vec4& v) {
    ProjectivePoint out;
    Mat2c H = herm(v);
    out.sphere = klein(v);
    if (std::abs(H(1, 1)) < 1e-300) {
        out.at_infinity = true;
        out.z = cd(INFINITY, 0);
    } else {
        out.z = H(0, 1) / H(1, 1);
    }
    return out;
}

ProjectivePoint projective(const Domain& dom, const Vec3& p) {
    auto l = lift(dom, p);
    if (std::abs(l.f.T - 1) > 1e-9) throw Error("NotOnLevelOne", "projective map is defined on the level T = 1");
    return null_to_projective(act4(factor_product(l.cr, kI), embed4(l.f.N) + e3()));
}

double sphere_distance(const Vec3& a, const Vec3& b) {
    return std::atan2(a.normalized().cross(b.normalized()).norm(), a.normalized().dot(b.normalized()));
}

Vec3 klein(const Vec4& v) { return v.tail<3>() / v[0]; }

// ---- single geodesic

Lamination single_geodesic_lamination(double a0) {
    Lamination lam;
    lam.leaves.push_back(make_leaf(M_PI, 0, a0));
    return lam;
}

namespace {
void check_sg(double a0, double T) {
    if (!(a0 > 0) || !(T > 0)) throw Error("BadBranch", "single geodesic maps need a0 > 0 and T > 0");
}
// horizontal scale factor of du^2 per branch
double c_factor(double a0, double T, double zeta) {
    if (zeta < 0) return std::cosh(zeta);
    if (zeta <= a0 / T) return 1;
    return std::cosh(zeta - a0 / T);
}
}  // namespace

Vec3 single_geodesic_flat(double a0, double T, double u, double zeta) {
    check_sg(a0, T);
    if (zeta < 0) return T * Vec3(std::cosh(u) * std::cosh(zeta), std::sinh(u) * std::cosh(zeta), std::sinh(zeta));
    if (zeta <= a0 / T) return T * Vec3(std::cosh(u), std::sinh(u), zeta);
    double z = zeta - a0 / T;
    return T * Vec3(std::cosh(u) * std::cosh(z), std::sinh(u) * std::cosh(z), std::sinh(z) + a0 / T);
}

namespace {
// shared shape of the hyperbolic and de Sitter maps: ch(d) N-part + sh(d) normal part
// (or swapped), bent by the rotation n -> cos a n - sin a e3, e3 -> cos a e3 + sin a n
Vec4 bent(double a0, double T, double u, double zeta, double cN, double cE) {
    if (zeta < 0)
        return cN * Vec4(std::cosh(zeta) * std::cosh(u), std::cosh(zeta) * std::sinh(u), std::sinh(zeta), 0) +
               cE * Vec4(0, 0, 0, 1);
    if (zeta <= a0 / T) {
        double th = T * zeta;
        return cN * Vec4(std::cosh(u), std::sinh(u), 0, 0) + cE * Vec4(0, 0, std::sin(th), std::cos(th));
    }
    double z = zeta - a0 / T;
    return cN * Vec4(std::cosh(z) * std::cosh(u), std::cosh(z) * std::sinh(u), std::sinh(z) * std::cos(a0),
                     -std::sinh(z) * std::sin(a0)) +
           cE * Vec4(0, 0, std::sin(a0), std::cos(a0));
}
}  // namespace

Vec4 single_geodesic_hyperbolic(double a0, double T, double u, double zeta) {
    check_sg(a0, T);
    if (!(T > 1)) throw Error("TimeNotAboveOne", "wick rotation needs T > 1");
    double d = std::atanh(1 / T);
    return bent(a0, T, u, zeta, std::cosh(d), std::sinh(d));
}

Vec4 single_geodesic_ds(double a0, double T, double u, double zeta) {
    check_sg(a0, T);
    if (!(T < 1)) throw Error("TimeNotBelowOne", "de Sitter rescaling needs T < 1");
    double t = std::atanh(T);
    return ds_normalize(bent(a0, T, u, zeta, std::sinh(t), std::cosh(t)));
}

Mat2 single_geodesic_ads(double a0, double T, double u, double zeta) {
    check_sg(a0, T);
    double t = std::atan(T), ct = std::cos(t), st = std::sin(t);
    Mat2 X = mink_to_sl2(Vec3(0, 0, 1));
    Vec3 Nu(std::cosh(u), std::sinh(u), 0);
    Mat2 out;
    if (zeta < 0) {
        Vec3 N(std::cosh(zeta) * std::cosh(u), std::cosh(zeta) * std::sinh(u), std::sinh(zeta));
        out = ct * Mat2::Identity() + st * pi_rotation(N);
    } else if (zeta <= a0 / T) {
        out = ct * mat_exp(Mat2(-T * zeta * X)) + st * pi_rotation(Nu);
    } else {
        double z = zeta - a0 / T;
        Mat2 E = mat_exp(Mat2(-a0 * X));
        out = ct * E + st * (std::cosh(z) * pi_rotation(Nu) - std::sinh(z) * X * E);
    }
    return proj_normalize(out);
}

Mat3 single_geodesic_metric(Kind kind, double a0, double T, double zeta) {
    check_sg(a0, T);
    double c = c_factor(a0, T, zeta);
    double T2 = T * T;
    double gT = 0, h = 0;
    switch (kind) {
        case Kind::flat: gT = -1; h = T2; break;
        case Kind::hyperbolic: {
            auto r = rescaling(kind, T);
            gT = r.beta;
            h = r.alpha * T2;
            break;
        }
        case Kind::deSitter:
        case Kind::antiDeSitter: {
            auto r = rescaling(kind, T);
            gT = -r.beta;
            h = r.alpha * T2;
            break;
        }
    }
    return Eigen::Vector3d(gT, h, h * c * c).asDiagonal();
}

// ---- pullback harness

Mat3 numeric_pullback(const std::function<Eigen::VectorXd(const Vec3&)>& f, const Vec3& p, const Mat3& frame, double h,
                      const std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>& g) {
    Eigen::VectorXd c = f(p);
    auto aligned = [&](const Vec3& q) {
        Eigen::VectorXd v = f(q);
        return (v - c).norm() <= (v + c).norm() ? v : Eigen::VectorXd(-v);
    };
    double step = h;
    std::vector<Eigen::VectorXd> J;
    for (int k = 0; k < 3; ++k) {
        Vec3 e = frame.col(k);
        J.push_back((aligned(p + step * e) - aligned(p - step * e)) / (2 * step));
    }
    Mat3 G;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) G(i, j) = g(J[i], J[j]);
    return G;
}

namespace {
Mat3 adapted_frame(const Vec3& N) {
    // columns N, e1, e2: Minkowski orthonormal
    Mat3 F;
    F.col(0) = N;
    int col = 1;
    for (int k = 0; k < 3 && col < 3; ++k) {
        Vec3 v = Vec3::Unit(k);
        v += mink(v, N) * N;
        for (int j = 1; j < col; ++j) v -= mink(v, Vec3(F.col(j))) * Vec3(F.col(j));
        double q = mink(v, v);
        if (q < 1e-6) continue;
        F.col(col++) = v / std::sqrt(q);
    }
    return F;
}

Eigen::VectorXd flat4(const Vec4& v) { return v; }
Eigen::VectorXd flatm(const Mat2& m) {
    Eigen::VectorXd v(4);
    v << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    return v;
}
Mat2 unflatm(const Eigen::VectorXd& v) {
    Mat2 m;
    m << v[0], v[1], v[2], v[3];
    return m;
}
}  // namespace

PullbackReport pullback_residual(const Domain& dom, const Vec3& p, Kind kind, double h, double margin) {
    Frame f = dom.ct_frame(p);
    auto r = rescaling(kind, f.T);
    const auto& lam = dom.lam();
    if (f.kind == Frame::Kind::Band) {
        if (f.s < margin || f.s > 1 - margin) throw Error("TooCloseToBreakLocus", "point too close to a band edge");
    } else if (f.kind == Frame::Kind::BoundaryBand) {
        if (f.s < margin) throw Error("TooCloseToBreakLocus", "point too close to a boundary band edge");
    } else {
        for (const auto& l : lam.leaves)
            if (std::abs(mink(f.N, l.g.n)) < margin) throw Error("TooCloseToBreakLocus", "Gauss image too close to a leaf");
        for (const auto& b : lam.boundary)
            if (std::abs(mink(f.N, b.n)) < margin) throw Error("TooCloseToBreakLocus", "Gauss image too close to the boundary");
    }
    Mat3 F = adapted_frame(f.N);
    std::function<Eigen::VectorXd(const Vec3&)> map;
    std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)> g;
    Mat3 expected;
    switch (kind) {
        case Kind::flat:
            map = [](const Vec3& q) { return Eigen::VectorXd(q); };
            g = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return mink(a, b); };
            expected = Eigen::Vector3d(-1, 1, 1).asDiagonal();
            break;
        case Kind::hyperbolic:
            map = [&](const Vec3& q) { return flat4(wick_rotate(dom, q)); };
            g = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return mink4(a, b); };
            expected = Eigen::Vector3d(r.beta, r.alpha, r.alpha).asDiagonal();
            break;
        case Kind::deSitter:
            map = [&](const Vec3& q) { return flat4(ds(dom, q)); };
            g = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return mink4(a, b); };
            expected = Eigen::Vector3d(-r.beta, r.alpha, r.alpha).asDiagonal();
            break;
        case Kind::antiDeSitter:
            map = [&](const Vec3& q) { return flatm(ads(dom, q)); };
            g = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return ads_form(unflatm(a), unflatm(b)); };
            expected = Eigen::Vector3d(-r.beta, r.alpha, r.alpha).asDiagonal();
            break;
    }
    PullbackReport rep{p, kind, h, 0, numeric_pullback(map, p, F, h, g), expected};
    rep.residual = (rep.numeric - rep.expected).cwiseAbs().maxCoeff();
    return rep;
}

}  // namespace wick
