#pragma once

#include <string>
#include <vector>

#include "wick/core.hpp"

namespace wick {

struct Leaf {
    Geodesic g;
    double weight = 0;
};

// Support is the whole plane when `boundary` is empty; otherwise the
// intersection of the closed half-planes {<x,n> >= 0} of the boundary normals.
struct Lamination {
    std::vector<Leaf> leaves;
    std::vector<Geodesic> boundary;

    bool full_plane() const { return boundary.empty(); }
    bool in_support(const Vec3& x, double tol = 0) const;
};

Leaf make_leaf(double theta1, double theta2, double weight);

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> failures;
    double min_separation = 0;  // min |<u_i,u_j>| over pairs, +inf style 0 when <2 leaves
    std::vector<std::pair<int, int>> asymptotic;
    std::vector<std::pair<int, int>> overlapping;
};
Diagnostics validate(const Lamination& lam);

struct Crossing {
    int leaf;       // index into lam.leaves, -1 for a synthetic factor
    Vec3 normal;    // unit normal of the leaf pointing towards the far end
    Mat2 X;         // unit translation generator with sl2_to_mink(X) = normal
    double weight;  // effective weight (half at segment endpoints on the leaf)
    double t;       // Klein chord parameter
};

// leaves separating x from y, in order along [x,y]
std::vector<Crossing> crossing_data(const Lamination& lam, const Vec3& x, const Vec3& y);
double total_mass(const Lamination& lam, const Vec3& x, const Vec3& y);

// leaves orthogonal to a base geodesic, density piecewise constant in arc length
struct ParametricFamily {
    Geodesic base;
    std::vector<double> breaks;   // s_0 < s_1 < ... < s_K
    std::vector<double> density;  // K values, >= 0

    static ParametricFamily lebesgue(const Geodesic& g, double s0, double s1, double w = 1.0);
    double s0() const { return breaks.front(); }
    double s1() const { return breaks.back(); }
    Vec3 point(double s) const { return base.point(s); }
    Vec3 normal(double s) const;  // unit normal of the orthogonal leaf at s (= base tangent)
    double density_at(double s) const;
    double mass(double a, double b) const;
    double max_density() const;
    // rho-type integral of w(s) * normal(s) over [a,b] (a<=b), closed form
    Vec3 integral(double a, double b) const;
    // arc-length parameter of the orthogonal projection of x on the base geodesic
    double foot_param(const Vec3& x) const;
};
Lamination approximate(const ParametricFamily& fam, int n);

Lamination push(const Lamination& lam, const Mat3& g);
bool is_invariant(const Lamination& lam, const Mat3& g, double tol = 1e-9);

}  // namespace wick
