#pragma once

#include "wick/ads.hpp"

namespace wick {

struct SpectrumEntry {
    double ell = 0;
    double em = 0;
    bool branch_ambiguous = false;  // dS only: em at +-pi
    double residual = 0;            // trace reconstruction error (dS)
};

// unit direction of the translation axis of a hyperbolic element (positive generator)
Vec3 axis_direction(const Mat2& gamma);
double margulis(const Mat2& gamma, const Vec3& tau);

SpectrumEntry ds_spectrum(const Mat2c& M);
SpectrumEntry ads_spectrum(const IsomPair& pair);

struct SpectralDerivative {
    double d_ell_ds, d_em_ds;    // along t -> h^1_{t lambda}
    double d_ell_ads, d_em_ads;  // along t -> h^{-1}_{t lambda}
    double margulis0;            // <v, rho(gamma x0)>
};
SpectralDerivative spectral_derivative(const Domain& dom, const Mat2& gamma, double h = 1e-4);

double area(int kappa, double b, double chi, double lam_length);
double volume(int kappa, double b, double chi, double lam_length);

}  // namespace wick
