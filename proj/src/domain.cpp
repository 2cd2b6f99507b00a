#include "wick/domain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace wick {

namespace {
constexpr double kTol = 1e-12;
constexpr double kTwoPi = 2 * M_PI;

double rel(const Vec3& x) { return std::max(1.0, x.cwiseAbs().maxCoeff()); }
}  // namespace

std::vector<int> Domain::signs(const Vec3& x, bool strict) const {
    std::vector<int> s(lam_.leaves.size());
    double sc = rel(x);
    for (size_t i = 0; i < s.size(); ++i) {
        double v = mink(x, lam_.leaves[i].g.n);
        double tol = strict ? 0.0 : kTol * sc;
        s[i] = v > tol ? 1 : (v < -tol ? -1 : 0);
    }
    return s;
}

Domain::Domain(Lamination lam, const Vec3& x0) : lam_(std::move(lam)), x0_(x0) {
    if (!is_h2(x0_, 1e-10)) throw Error("BadBasepoint", "basepoint is not on the hyperboloid");
    if (!lam_.in_support(x0_, 0)) throw Error("NotInSupport", "basepoint outside the support");
    const size_t n = lam_.leaves.size();
    for (size_t i = 0; i < n; ++i)
        if (std::abs(mink(x0_, lam_.leaves[i].g.n)) < 1e-6)
            throw Error("BasepointOnLeaf", "basepoint within 1e-6 of leaf " + std::to_string(i));

    auto s0 = signs(x0_, true);
    oriented_.resize(n);
    for (size_t i = 0; i < n; ++i) oriented_[i] = -s0[i] * lam_.leaves[i].g.n;

    auto add_face = [&](const std::vector<int>& s) {
        auto it = index_.find(s);
        if (it != index_.end()) return it->second;
        FaceInfo f;
        f.sign = s;
        for (size_t i = 0; i < n; ++i)
            if (s[i] != s0[i]) f.rho += lam_.leaves[i].weight * s[i] * lam_.leaves[i].g.n;
        faces_.push_back(f);
        index_[s] = (int)faces_.size() - 1;
        return (int)faces_.size() - 1;
    };

    base_face_ = add_face(s0);
    near_.resize(n);
    far_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        auto s = signs(lam_.leaves[i].g.foot(), true);
        s[i] = s0[i];
        near_[i] = add_face(s);
        s[i] = -s0[i];
        far_[i] = add_face(s);
    }

    // ideal arcs of each face
    std::vector<double> ends;
    for (const auto& l : lam_.leaves) {
        auto [a, b] = l.g.ends();
        ends.push_back(a);
        ends.push_back(b);
    }
    for (const auto& b : lam_.boundary) {
        auto [a, c] = b.ends();
        ends.push_back(a);
        ends.push_back(c);
    }
    std::sort(ends.begin(), ends.end());
    std::vector<double> uniq;
    for (double e : ends)
        if (uniq.empty() || e - uniq.back() > 1e-12) uniq.push_back(e);
    if (uniq.size() > 1 && uniq.front() + kTwoPi - uniq.back() < 1e-12) uniq.pop_back();
    std::vector<std::pair<double, double>> arcs;
    if (uniq.empty()) {
        arcs.push_back({0.0, kTwoPi});
    } else {
        for (size_t k = 0; k < uniq.size(); ++k) {
            double a = uniq[k];
            double b = k + 1 < uniq.size() ? uniq[k + 1] : uniq[0] + kTwoPi;
            arcs.push_back({a, b - a});
        }
    }
    for (auto [a, len] : arcs) {
        Vec3 xi = ideal(a + len / 2);
        if (!lam_.in_support(xi, 0)) continue;
        auto s = signs(xi, true);
        auto it = index_.find(s);
        if (it == index_.end()) continue;  // cannot happen for disjoint leaves
        faces_[it->second].arcs.push_back({a, len});
    }

    bface_.resize(lam_.boundary.size());
    for (size_t b = 0; b < lam_.boundary.size(); ++b) {
        auto s = signs(lam_.boundary[b].foot(), true);
        auto it = index_.find(s);
        bface_[b] = it == index_.end() ? base_face_ : it->second;
        faces_[bface_[b]].boundary.push_back((int)b);
    }
}

int Domain::face_of(const Vec3& x) const {
    auto s = signs(x, false);
    for (int v : s)
        if (v == 0) return -1;
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

Vec3 Domain::rho(const Vec3& x) const {
    int f = face_of(x);
    if (f < 0) throw Error("QueryOnLeaf", "rho is two-valued on a leaf; use rho_pm");
    return faces_[f].rho;
}

std::pair<Vec3, Vec3> Domain::rho_pm(int leaf) const { return {faces_[near_[leaf]].rho, faces_[far_[leaf]].rho}; }

Vec3 Domain::embed(const Vec3& x, double a) const {
    if (!(a > 0)) throw Error("BadTime", "a must be positive");
    if (!lam_.in_support(x, 0)) throw Error("NotInSupport", "point outside the support");
    int f = face_of(x);
    if (f < 0) throw Error("NotInSupport", "point lies on a weighted leaf; use embed_band");
    return a * x + faces_[f].rho;
}

Vec3 Domain::embed_band(int leaf, double t, double a, double s) const {
    if (!(a > 0)) throw Error("BadTime", "a must be positive");
    if (s < 0 || s > 1) throw Error("BadBand", "band parameter outside [0,1]");
    Vec3 x = lam_.leaves[leaf].g.point(t);
    auto [rm, rp] = rho_pm(leaf);
    return a * x + s * rp + (1 - s) * rm;
}

bool Domain::contains(const Vec3& p) const {
    double tol = 1e-12 * rel(p);
    for (const auto& f : faces_) {
        Vec3 q = p - f.rho;
        for (auto [a, len] : f.arcs) {
            auto val = [&](double th) { return -q[0] + q[1] * std::cos(th) + q[2] * std::sin(th); };
            double m = std::max(val(a), val(a + len));
            double th = std::atan2(q[2], q[1]);
            double d = std::fmod(th - a, kTwoPi);
            if (d < 0) d += kTwoPi;
            if (d <= len) m = std::max(m, val(th));
            if (m >= -tol) return false;
        }
    }
    return true;
}

Frame Domain::ct_frame(const Vec3& p) const {
    if (!contains(p)) throw Error("OutsideDomain", "point is not in the domain");
    Frame best;
    best.T = -1;
    double sc = rel(p);
    auto consider = [&](const Frame& f, bool band) {
        if (f.T > best.T + 1e-12 * sc || (band && f.T > best.T - 1e-12 * sc && best.kind == Frame::Kind::Face))
            best = f;
    };
    for (size_t k = 0; k < faces_.size(); ++k) {
        const auto& F = faces_[k];
        Vec3 q = p - F.rho;
        double Q = -mink(q, q);
        if (!(Q > 0) || q[0] <= 0) continue;
        Vec3 x = q / std::sqrt(Q);
        auto s = signs(x, false);
        bool ok = true;
        for (size_t i = 0; i < s.size() && ok; ++i)
            if (s[i] != 0 && s[i] != F.sign[i]) ok = false;
        if (!ok || !lam_.in_support(x, 1e-12 * rel(x))) continue;
        Frame f;
        f.T = std::sqrt(Q);
        f.N = x;
        f.r = F.rho;
        f.kind = Frame::Kind::Face;
        f.face = (int)k;
        consider(f, false);
    }
    for (size_t i = 0; i < lam_.leaves.size(); ++i) {
        auto [rm, rp] = rho_pm((int)i);
        double w = lam_.leaves[i].weight;
        const Vec3& n = oriented_[i];
        double s = mink(p - rm, n) / w;
        if (s < -1e-12 || s > 1 + 1e-12) continue;
        s = std::clamp(s, 0.0, 1.0);
        Vec3 r = rm + s * w * n;
        Vec3 q = p - r;
        q -= mink(q, n) * n;
        double Q = -mink(q, q);
        if (!(Q > 0) || q[0] <= 0) continue;
        Frame f;
        f.T = std::sqrt(Q);
        f.N = q / f.T;
        f.r = r;
        f.kind = Frame::Kind::Band;
        f.face = near_[i];
        f.leaf = (int)i;
        f.s = s;
        consider(f, true);
    }
    for (size_t b = 0; b < lam_.boundary.size(); ++b) {
        const Vec3& nb = lam_.boundary[b].n;
        const Vec3& rf = faces_[bface_[b]].rho;
        double t = -mink(p - rf, nb);
        if (t < -1e-12 * sc) continue;
        t = std::max(0.0, t);
        Vec3 r = rf - t * nb;
        Vec3 q = p - r;
        q -= mink(q, nb) * nb;
        double Q = -mink(q, q);
        if (!(Q > 0) || q[0] <= 0) continue;
        Frame f;
        f.T = std::sqrt(Q);
        f.N = q / f.T;
        f.r = r;
        f.kind = Frame::Kind::BoundaryBand;
        f.face = bface_[b];
        f.leaf = (int)b;
        f.s = t;
        consider(f, true);
    }
    if (best.T <= 0) throw Error("OutsideDomain", "no stratum realizes the cosmological time");
    return best;
}

double SingularityTree::delta(int i, int j) const {
    // depth-first walk on the tree from i
    std::vector<std::vector<std::pair<int, double>>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.a].push_back({e.b, e.length});
        adj[e.b].push_back({e.a, e.length});
    }
    std::vector<double> dist(vertices.size(), -1);
    std::vector<int> stack{i};
    dist[i] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, l] : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + l;
                stack.push_back(u);
            }
    }
    return dist[j];
}

SingularityTree singularity_tree(const Domain& dom) {
    SingularityTree t;
    for (const auto& f : dom.faces()) t.vertices.push_back(f.rho);
    for (size_t i = 0; i < dom.lam().leaves.size(); ++i)
        t.edges.push_back({dom.near_face((int)i), dom.far_face((int)i), (int)i, dom.lam().leaves[i].weight});
    return t;
}

AffineIsom flat_holonomy(const Domain& dom, const Mat3& gamma) {
    if (!is_invariant(dom.lam(), gamma)) throw Error("NotInvariant", "lamination is not invariant under gamma");
    Vec3 y = gamma * dom.basepoint();
    if (dom.face_of(y) < 0) throw Error("ImageOnLeaf", "gamma moves the basepoint onto a leaf");
    return {gamma, dom.rho(y)};
}

}  // namespace wick
