#pragma once

#include <random>

#include "wick/domain.hpp"

namespace wick {

// every random draw in the project goes through this engine
using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b);
Vec3 random_h2(Rng& rng, const Vec3& center, double radius);
Mat2 random_sl2(Rng& rng, double scale = 1.0);

// rejection-sampled disjoint chords, kept away from the basepoint
Lamination random_lamination(Rng& rng, int leaves, const Vec3& x0, double wmin = 0.1, double wmax = 1.0);

struct DomainSample {
    Vec3 p;
    Frame expected;  // the frame the point was built from
};
// forward-embedded point: a face point (N off the leaves by `margin`) or a band point
// (s in [margin, 1 - margin]); T drawn from [tmin, tmax]
DomainSample sample_domain(Rng& rng, const Domain& dom, double tmin, double tmax, double margin = 1e-2,
                           double radius = 2.0, double band_fraction = 0.3);

}  // namespace wick
