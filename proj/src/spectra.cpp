#include "wick/spectra.hpp"

#include <cmath>

namespace wick {

Vec3 axis_direction(const Mat2& g) {
    Mat2 A = g.trace() < 0 ? Mat2(-g) : g;
    double tr = A.trace();
    if (tr < 2.0 + 1e-14) throw Error("NotHyperbolic", "element is not hyperbolic");
    double sh = std::sinh(std::acosh(tr / 2));
    Mat2 Y = (A - 0.5 * tr * Mat2::Identity()) / sh;  // A = exp(l Y / 2)
    return sl2_to_mink(Y);
}

double margulis(const Mat2& gamma, const Vec3& tau) { return mink(axis_direction(gamma), tau); }

SpectrumEntry ds_spectrum(const Mat2c& M) {
    cd tr = M.trace() / std::sqrt(M.determinant());
    if (tr.real() < 0) tr = -tr;
    cd w = std::acosh(tr / 2.0);
    if (w.real() < 0) w = -w;
    SpectrumEntry e;
    e.ell = 2 * w.real();
    double m = std::remainder(2 * w.imag(), 2 * M_PI);  // in [-pi, pi]
    if (m <= -M_PI) m += 2 * M_PI;
    e.em = m;
    e.branch_ambiguous = std::abs(std::abs(m) - M_PI) < 1e-12;
    cd rec = 2.0 * std::cosh(cd(e.ell / 2, e.em / 2));
    e.residual = std::min(std::abs(tr - rec), std::abs(tr + rec));
    return e;
}

SpectrumEntry ads_spectrum(const IsomPair& p) {
    auto hyp = [](const Mat2& A) {
        if (std::abs(A.trace()) < 2.0 + 1e-14) throw Error("NotHyperbolic", "both components must be hyperbolic");
        return translation_length(A);
    };
    double m = hyp(p.left), n = hyp(p.right);
    return {(m + n) / 2, (n - m) / 2, false, 0};
}

SpectralDerivative spectral_derivative(const Domain& dom, const Mat2& gamma, double h) {
    const auto& lam = dom.lam();
    const Vec3& x0 = dom.basepoint();
    auto dsd = [&](double t) { return ds_spectrum(hyperbolic_holonomy_scaled(lam, x0, gamma, t)); };
    auto adsd = [&](double t) { return ads_spectrum(ads_holonomy_scaled(lam, x0, gamma, t)); };
    auto dp = dsd(h), dm = dsd(-h), ap = adsd(h), am = adsd(-h);
    SpectralDerivative d;
    d.d_ell_ds = (dp.ell - dm.ell) / (2 * h);
    d.d_em_ds = std::remainder(dp.em - dm.em, 2 * M_PI) / (2 * h);
    d.d_ell_ads = (ap.ell - am.ell) / (2 * h);
    d.d_em_ads = (ap.em - am.em) / (2 * h);
    Vec3 y = act(gamma, x0);
    Vec3 rho = Vec3::Zero();
    for (const auto& c : crossing_data(lam, x0, y)) rho += c.weight * c.normal;
    d.margulis0 = margulis(gamma, rho);
    return d;
}

namespace {
void check_range(int kappa, double b) {
    if (kappa != 0 && kappa != 1 && kappa != -1) throw Error("BadRange", "kappa must be -1, 0 or 1");
    if (!(b >= 0)) throw Error("BadRange", "b must be non-negative");
    if (kappa == -1 && b > M_PI / 2 + 1e-15) throw Error("BadRange", "b must not exceed pi/2 for kappa = -1");
}
}  // namespace

double area(int kappa, double b, double chi, double L) {
    check_range(kappa, b);
    switch (kappa) {
        case 0: return -2 * M_PI * b * b * chi + b * L;
        case -1: return -2 * M_PI * std::pow(std::sin(b), 2) * chi + L * std::sin(b) * std::cos(b);
        default: return -2 * M_PI * std::pow(std::sinh(b), 2) * chi + L * std::sinh(b) * std::cosh(b);
    }
}

double volume(int kappa, double b, double chi, double L) {
    check_range(kappa, b);
    switch (kappa) {
        case 0: return -2 * M_PI * chi * b * b * b / 3 + L * b * b / 2;
        case -1: return -2 * M_PI * chi * (2 * b - std::sin(2 * b)) / 4 + L * std::pow(std::sin(b), 2) / 2;
        default: return -2 * M_PI * chi * (std::sinh(2 * b) - 2 * b) / 4 + L * std::pow(std::sinh(b), 2) / 2;
    }
}

}  // namespace wick
