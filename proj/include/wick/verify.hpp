#pragma once

#include <string>

#include "wick/ads.hpp"
#include "wick/sampling.hpp"

namespace wick {

// tolerances of the property suites
namespace tol {
constexpr double decomposition = 1e-10;
constexpr double gradient = 1e-4;
constexpr double fundamental = 1e-12;
constexpr double cocycle = 1e-9;
constexpr double derivative = 1e-4;
constexpr double pullback = 1e-5;
constexpr double pullback_near_band = 1e-4;
constexpr double single_geodesic = 1e-9;
constexpr double gluing = 1e-6;
constexpr double completion = 1e-8;
constexpr double klein = 1e-4;
constexpr double earthquake = 1e-8;
constexpr double ads_length = 1e-4;
constexpr double holonomy = 1e-10;
constexpr double trace = 1e-10;
constexpr double spectral = 1e-3;
constexpr double volume_derivative = 1e-8;
constexpr double quadrature = 1e-10;
constexpr double qd_pullback = 1e-5;
constexpr double ray_limit = 1e-6;
}  // namespace tol

struct SuiteResult {
    std::string name;
    double value = 0;      // worst observed quantity
    double tolerance = 0;
    long samples = 0;
    bool pass = false;
    std::string detail;
};

SuiteResult verify_decomposition(const Domain& dom, Rng& rng, int samples);
SuiteResult verify_gradient(const Domain& dom, Rng& rng, int samples, double h = 1e-5);
SuiteResult verify_fundamental(const Domain& dom, Rng& rng, int pairs);
SuiteResult verify_monotone(const Domain& dom, Rng& rng, int pairs);
SuiteResult verify_cocycle(const Lamination& lam, Rng& rng, int triples, cd z);
SuiteResult verify_derivative(const Lamination& lam, Rng& rng, int pairs, double h = 1e-5);
SuiteResult verify_pullback(const Domain& dom, Kind kind, Rng& rng, int samples, double h = 1e-5, double margin = 1e-2);
// band points at band-parameter distance in [margin, 2 margin] from an edge, refined step
SuiteResult verify_pullback_near_band(const Domain& dom, Kind kind, Rng& rng, int samples, double h = 1e-6,
                                      double margin = 1e-3);
SuiteResult verify_completion(const Domain& dom, Rng& rng, int lines);
SuiteResult verify_klein(const Domain& dom, Rng& rng, int lines, double eps = 1e-3);
SuiteResult verify_earthquake(const Lamination& lam, const Vec3& x0, Rng& rng, int pairs);
SuiteResult verify_ads_length(const Lamination& lam, const Vec3& x0, Rng& rng, int polylines, int points = 1000);
SuiteResult verify_single_geodesic(Rng& rng, int per_branch);
SuiteResult verify_gluing(double a0);

SuiteResult fail_with(const std::string& name, double tolerance, const std::exception& e);

}  // namespace wick
