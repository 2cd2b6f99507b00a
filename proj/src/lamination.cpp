#include "wick/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wick {

namespace {
constexpr double kOnLeaf = 1e-12;
constexpr double kDisjoint = 1e-9;

double side_value(const Vec3& x, const Vec3& n) { return mink(x, n) / std::max(1.0, x[0]); }

int sgn(double v) { return v > kOnLeaf ? 1 : (v < -kOnLeaf ? -1 : 0); }

bool same_endpoint(double a, double b) {
    double d = norm_angle(a - b);
    return std::min(d, 2 * M_PI - d) < 1e-7;
}
}  // namespace

bool Lamination::in_support(const Vec3& x, double tol) const {
    for (const auto& b : boundary)
        if (mink(x, b.n) < -tol) return false;
    return true;
}

Leaf make_leaf(double a, double b, double w) { return {geodesic(a, b), w}; }

Diagnostics validate(const Lamination& lam) {
    Diagnostics d;
    const auto& L = lam.leaves;
    double minsep = 0;
    bool first = true;
    for (size_t i = 0; i < L.size(); ++i) {
        if (!(L[i].weight > 0) || !std::isfinite(L[i].weight)) {
            std::ostringstream os;
            os << "leaf " << i << ": weight must be positive and finite";
            d.failures.push_back(os.str());
        }
        for (size_t j = i + 1; j < L.size(); ++j) {
            double s = std::abs(mink(L[i].g.n, L[j].g.n));
            if (first || s < minsep) minsep = s;
            first = false;
            if (s >= 1 + kDisjoint) continue;
            std::ostringstream os;
            if (s > 1 - kDisjoint) {
                auto [a1, b1] = L[i].g.ends();
                auto [a2, b2] = L[j].g.ends();
                int shared = (same_endpoint(a1, a2) || same_endpoint(a1, b2)) + (same_endpoint(b1, a2) || same_endpoint(b1, b2));
                if (shared >= 2) {
                    os << "leaves " << i << " and " << j << " are not disjoint (same geodesic)";
                    d.overlapping.push_back({(int)i, (int)j});
                    d.failures.push_back(os.str());
                } else {
                    d.asymptotic.push_back({(int)i, (int)j});
                }
            } else {
                os << "leaves " << i << " and " << j << " are not disjoint (they cross)";
                d.overlapping.push_back({(int)i, (int)j});
                d.failures.push_back(os.str());
            }
        }
        for (size_t k = 0; k < lam.boundary.size(); ++k) {
            const auto& b = lam.boundary[k];
            auto [a1, b1] = L[i].g.ends();
            bool inside = mink(ideal(a1), b.n) >= -1e-9 && mink(ideal(b1), b.n) >= -1e-9;
            double s = std::abs(mink(L[i].g.n, b.n));
            bool same = s > 1 - kDisjoint && s < 1 + kDisjoint &&
                        (same_endpoint(a1, b.ends().first) || same_endpoint(a1, b.ends().second)) &&
                        (same_endpoint(b1, b.ends().first) || same_endpoint(b1, b.ends().second));
            if (!inside || s < 1 - kDisjoint || same) {
                std::ostringstream os;
                os << "leaf " << i << " is not inside the support (boundary " << k << ")";
                d.failures.push_back(os.str());
            }
        }
    }
    d.min_separation = minsep;
    d.ok = d.failures.empty();
    return d;
}

std::vector<Crossing> crossing_data(const Lamination& lam, const Vec3& x, const Vec3& y) {
    std::vector<Crossing> out;
    for (size_t i = 0; i < lam.leaves.size(); ++i) {
        const Vec3& n = lam.leaves[i].g.n;
        double a = side_value(x, n), b = side_value(y, n);
        int sa = sgn(a), sb = sgn(b);
        if (sa == 0 && sb == 0) {
            if ((x - y).norm() < 1e-14) continue;  // degenerate segment
            throw Error("BasepointOnLeaf", "both segment endpoints lie on leaf " + std::to_string(i));
        }
        if (sa == sb) continue;
        double w = lam.leaves[i].weight;
        if (sa == 0 || sb == 0) w *= 0.5;
        Vec3 normal = sb != 0 ? Vec3(sb * n) : Vec3(-sa * n);
        double fx = mink(x, n) / x[0], fy = mink(y, n) / y[0];
        double t = sa == 0 ? 0.0 : (sb == 0 ? 1.0 : fx / (fx - fy));
        out.push_back({(int)i, normal, mink_to_sl2(normal), w, t});
    }
    std::stable_sort(out.begin(), out.end(), [](const Crossing& p, const Crossing& q) { return p.t < q.t; });
    return out;
}

double total_mass(const Lamination& lam, const Vec3& x, const Vec3& y) {
    double m = 0;
    for (const auto& c : crossing_data(lam, x, y)) m += c.weight;
    return m;
}

ParametricFamily ParametricFamily::lebesgue(const Geodesic& g, double s0, double s1, double w) {
    return {g, {s0, s1}, {w}};
}

Vec3 ParametricFamily::normal(double s) const {
    return std::sinh(s) * base.foot() + std::cosh(s) * base.tangent();
}

double ParametricFamily::density_at(double s) const {
    for (size_t k = 0; k + 1 < breaks.size(); ++k)
        if (s >= breaks[k] && s <= breaks[k + 1]) return density[k];
    return 0;
}

double ParametricFamily::mass(double a, double b) const {
    double m = 0;
    for (size_t k = 0; k + 1 < breaks.size(); ++k) {
        double lo = std::max(a, breaks[k]), hi = std::min(b, breaks[k + 1]);
        if (hi > lo) m += density[k] * (hi - lo);
    }
    return m;
}

double ParametricFamily::max_density() const { return *std::max_element(density.begin(), density.end()); }

Vec3 ParametricFamily::integral(double a, double b) const {
    // d/ds point(s) = normal(s)
    Vec3 acc = Vec3::Zero();
    for (size_t k = 0; k + 1 < breaks.size(); ++k) {
        double lo = std::max(a, breaks[k]), hi = std::min(b, breaks[k + 1]);
        if (hi > lo) acc += density[k] * (point(hi) - point(lo));
    }
    return acc;
}

double ParametricFamily::foot_param(const Vec3& x) const {
    // x = ch d (ch s m + sh s e) + sh d n  ->  tanh s = <x,e>/(-<x,m>)
    Vec3 m = base.foot(), e = base.tangent();
    return std::atanh(mink(x, e) / -mink(x, m));
}

Lamination approximate(const ParametricFamily& fam, int n) {
    if (n < 1) throw Error("BadCount", "n must be >= 1");
    Lamination lam;
    double h = (fam.s1() - fam.s0()) / n;
    for (int j = 0; j < n; ++j) {
        double a = fam.s0() + j * h, b = a + h;
        double m = fam.mass(a, b);
        if (m <= 0) continue;
        double mid = 0.5 * (a + b);
        lam.leaves.push_back({geodesic_from_normal(fam.normal(mid)), m});
    }
    return lam;
}

Lamination push(const Lamination& lam, const Mat3& g) {
    Lamination out;
    for (const auto& l : lam.leaves) out.leaves.push_back({geodesic_from_normal(g * l.g.n), l.weight});
    for (const auto& b : lam.boundary) out.boundary.push_back(geodesic_from_normal(g * b.n));
    return out;
}

bool is_invariant(const Lamination& lam, const Mat3& g, double tol) {
    Lamination p = push(lam, g);
    if (p.leaves.size() != lam.leaves.size() || p.boundary.size() != lam.boundary.size()) return false;
    std::vector<bool> used(lam.leaves.size(), false);
    for (const auto& l : p.leaves) {
        bool found = false;
        for (size_t j = 0; j < lam.leaves.size() && !found; ++j) {
            if (used[j]) continue;
            const auto& m = lam.leaves[j];
            double dn = std::min((l.g.n - m.g.n).norm(), (l.g.n + m.g.n).norm());
            if (dn <= tol && std::abs(l.weight - m.weight) <= tol) used[j] = found = true;
        }
        if (!found) return false;
    }
    std::vector<bool> usedb(lam.boundary.size(), false);
    for (const auto& b : p.boundary) {
        bool found = false;
        for (size_t j = 0; j < lam.boundary.size() && !found; ++j)
            if (!usedb[j] && (b.n - lam.boundary[j].n).norm() <= tol) usedb[j] = found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace wick
