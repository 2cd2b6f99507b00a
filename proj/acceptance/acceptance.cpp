// Acceptance harness: one line per criterion, exit 1 if any fails.
#include <sys/wait.h>

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>

#include "wick/io.hpp"
#include "wick/qd.hpp"
#include "wick/spectra.hpp"
#include "wick/verify.hpp"

using namespace wick;
namespace fs = std::filesystem;

namespace {

// tolerances not owned by a verify suite
constexpr double kApproxOrder = 0.9;
constexpr double kRayOrderLo = 0.9, kRayOrderHi = 1.1;
constexpr double kRayHolonomy = 1e-6;
constexpr double kOracleAgreement = 1e-8;

std::string fixture(const std::string& name) { return std::string(WICK_FIXTURES) + "/" + name; }

SuiteResult measured(const std::string& name, double value, double tolerance, long samples, std::string detail = "") {
    return {name, value, tolerance, samples, value < tolerance, std::move(detail)};
}

// run a part; a throwing part is a failing part
SuiteResult guarded(const std::string& name, double tolerance, const std::function<SuiteResult()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return fail_with(name, tolerance, e);
    }
}

// fold per-domain results of one suite into one part
SuiteResult worst_of(const std::string& name, const std::vector<SuiteResult>& rs) {
    SuiteResult out{name, 0, rs.empty() ? 0 : rs[0].tolerance, 0, true, ""};
    for (const auto& r : rs) {
        out.value = std::max(out.value, r.value);
        out.samples += r.samples;
        out.pass = out.pass && r.pass;
        if (!r.pass && out.detail.empty()) out.detail = r.detail;
    }
    return out;
}

int failures = 0;

void report(int id, const std::string& title, const std::vector<SuiteResult>& parts, double seconds) {
    bool pass = true;
    for (const auto& p : parts) pass = pass && p.pass;
    if (!pass) ++failures;
    std::printf("[%s] %2d %s:", pass ? "PASS" : "FAIL", id, title.c_str());
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        std::printf("%s %s %.3g/%.0e (n=%ld)%s%s%s", i ? ";" : "", p.name.c_str(), p.value, p.tolerance, p.samples,
                    p.pass ? "" : " FAIL", p.detail.empty() ? "" : " ", p.detail.c_str());
    }
    std::printf(" [%.1fs]\n", seconds);
    std::fflush(stdout);
}

template <class F>
void criterion(int id, const std::string& title, F body) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteResult> parts;
    try {
        parts = body();
    } catch (const std::exception& e) {
        parts.push_back(fail_with("harness", 0, e));
    }
    report(id, title, parts, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::vector<Domain> random_domains(Rng& rng, int count) {
    std::vector<Domain> out;
    Vec3 x0(1, 0, 0);
    for (int i = 0; i < count; ++i) out.emplace_back(random_lamination(rng, 1 + i % 8, x0), x0);
    return out;
}

Mat2 random_hyperbolic(Rng& rng) {
    for (;;) {
        Mat2 g = random_sl2(rng, 1.5);
        if (std::abs(g.trace()) > 2.2) return g;
    }
}

struct Run {
    int code;
    std::string out;
};
Run run_cli(const std::string& args) {
    std::string cmd = std::string(WICK_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

// ---- criterion 12: the Lebesgue family and its limit domain

struct Limit {
    ParametricFamily fam = ParametricFamily::lebesgue(geodesic(M_PI, 0), 0, 1);
    Vec3 x0 = fam.point(-0.5);

    Vec3 rho(double s) const { return fam.integral(0, std::clamp(s, 0.0, 1.0)); }
    // unit tangent of the orthogonal leaf through point(s)
    Vec3 along(double s) const {
        Vec3 c = fam.point(s), m = fam.normal(s);
        Vec3 d = c.cross(m);
        d[0] = -d[0];
        return d / std::sqrt(mink(d, d));
    }
    Vec3 leaf_point(double s, double t) const { return std::cosh(t) * fam.point(s) + std::sinh(t) * along(s); }
    // min over the leaf at s of -<p - rho, x>
    double leaf_min(const Vec3& p, double s) const {
        Vec3 q = p - rho(s);
        double A = -mink(q, fam.point(s)), B = -mink(q, along(s));
        return A > std::abs(B) ? std::sqrt(A * A - B * B) : -INFINITY;
    }
    // T_inf(p) = min over H2 of -<p - rho(x), x>, reduced to one parameter
    double T(const Vec3& p) const {
        double best = INFINITY;
        for (double side : {0.0, 1.0}) {
            Vec3 q = p - rho(side);
            double qq = -mink(q, q);
            if (qq <= 0 || q[0] <= 0) continue;
            double s = fam.foot_param(q / std::sqrt(qq));
            if ((side == 0 && s < 0) || (side == 1 && s > 1)) best = std::min(best, std::sqrt(qq));
        }
        const int grid = 2000;
        int arg = 0;
        double gbest = INFINITY;
        for (int i = 0; i <= grid; ++i) {
            double v = leaf_min(p, double(i) / grid);
            if (v < gbest) gbest = v, arg = i;
        }
        auto [s, v] = boost::math::tools::brent_find_minima([&](double s) { return leaf_min(p, s); },
                                                             std::max(0.0, (arg - 1.0) / grid),
                                                             std::min(1.0, (arg + 1.0) / grid), 50);
        (void)s;
        return std::min({best, gbest, v});
    }
};

// least-squares order of e(n) ~ n^-order, and monotone decrease
std::pair<double, bool> order_of(const std::vector<int>& ns, const std::vector<double>& es) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    bool mono = true;
    for (size_t i = 0; i < ns.size(); ++i) {
        double x = std::log(ns[i]), y = std::log(es[i]);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
        if (i && !(es[i] < es[i - 1])) mono = false;
    }
    double k = ns.size();
    return {-(k * sxy - sx * sy) / (k * sxx - sx * sx), mono};
}

std::string series(const std::vector<double>& es) {
    std::string s = "errors";
    char buf[32];
    for (double e : es) std::snprintf(buf, sizeof buf, " %.2e", e), s += buf;
    return s;
}

}  // namespace

int main() {
    auto five = load_lamination(fixture("five_leaves.json"));
    std::vector<std::pair<std::string, DomainSpec>> fixtures;
    for (const char* name : {"one_leaf", "five_leaves", "rot3", "halfplane"})
        fixtures.emplace_back(name, load_lamination(fixture(std::string(name) + ".json")));

    criterion(1, "decomposition round-trip", [] {
        Rng rng(101);
        std::vector<SuiteResult> rs;
        for (auto& dom : random_domains(rng, 20))
            rs.push_back(guarded("decomposition", tol::decomposition, [&] { return verify_decomposition(dom, rng, 500); }));
        return std::vector{worst_of("decomposition", rs)};
    });

    criterion(2, "gradient of T", [] {
        Rng rng(102);
        std::vector<SuiteResult> rs;
        for (auto& dom : random_domains(rng, 20))
            rs.push_back(guarded("gradient", tol::gradient, [&] { return verify_gradient(dom, rng, 50, 1e-5); }));
        return std::vector{worst_of("gradient", rs)};
    });

    criterion(3, "fundamental and monotone pair inequalities", [] {
        Rng rng(103);
        std::vector<SuiteResult> fr, mr;
        for (auto& dom : random_domains(rng, 20)) {
            fr.push_back(guarded("fundamental", tol::fundamental, [&] { return verify_fundamental(dom, rng, 500); }));
            mr.push_back(guarded("monotone", tol::fundamental, [&] { return verify_monotone(dom, rng, 500); }));
        }
        return std::vector{worst_of("fundamental", fr), worst_of("monotone", mr)};
    });

    criterion(4, "cocycle identity and derivative at zero", [&] {
        Rng rng(104);
        std::vector<Lamination> lams{five.lam};
        for (int i = 0; i < 3; ++i) lams.push_back(random_lamination(rng, 4 + i, Vec3(1, 0, 0)));
        std::vector<SuiteResult> parts;
        for (cd z : {cd(1, 0), cd(-1, 0), cd(0, 1), cd(0.3, 0.4)}) {
            std::vector<SuiteResult> rs;
            for (auto& lam : lams) rs.push_back(guarded("cocycle", tol::cocycle, [&] { return verify_cocycle(lam, rng, 250, z); }));
            char name[48];
            std::snprintf(name, sizeof name, "cocycle z=%g%+gi", z.real(), z.imag());
            parts.push_back(worst_of(name, rs));
        }
        std::vector<SuiteResult> ds;
        for (auto& lam : lams) ds.push_back(guarded("derivative", tol::derivative, [&] { return verify_derivative(lam, rng, 250, 1e-5); }));
        parts.push_back(worst_of("derivative", ds));
        return parts;
    });

    criterion(5, "Wick, de Sitter and AdS pullbacks", [&] {
        Rng rng(105);
        std::vector<SuiteResult> parts;
        for (Kind k : {Kind::hyperbolic, Kind::deSitter, Kind::antiDeSitter}) {
            std::vector<SuiteResult> rs, nb;
            for (auto& [name, spec] : fixtures) {
                Domain dom(spec.lam, spec.basepoint);
                rs.push_back(guarded("pullback", tol::pullback, [&] { return verify_pullback(dom, k, rng, 200, 1e-5, 1e-2); }));
                if (!spec.lam.leaves.empty())
                    nb.push_back(guarded("near-band", tol::pullback_near_band,
                                         [&] { return verify_pullback_near_band(dom, k, rng, 50); }));
            }
            parts.push_back(worst_of(kind_name(k), rs));
            parts.push_back(worst_of(kind_name(k) + "-near-band", nb));
        }
        return parts;
    });

    criterion(6, "single-geodesic closed forms", [] {
        Rng rng(106);
        return std::vector{guarded("pipeline", tol::single_geodesic, [&] { return verify_single_geodesic(rng, 100); }),
                           guarded("gluing", tol::gluing, [] { return verify_gluing(0.8); })};
    });

    criterion(7, "completion distance and Klein fit", [&] {
        Rng rng(107);
        Domain dom(five.lam, five.basepoint);
        return std::vector{guarded("completion", tol::completion, [&] { return verify_completion(dom, rng, 100); }),
                           guarded("klein", tol::klein, [&] { return verify_klein(dom, rng, 100, 1e-3); })};
    });

    criterion(8, "earthquake inverse and AdS path length", [&] {
        Rng rng(108);
        std::vector<DomainSpec> specs{five};
        for (int i = 0; i < 4; ++i) specs.push_back({random_lamination(rng, 5, Vec3(1, 0, 0)), Vec3(1, 0, 0)});
        std::vector<SuiteResult> eq, len;
        for (auto& s : specs) {
            eq.push_back(guarded("earthquake", tol::earthquake, [&] { return verify_earthquake(s.lam, s.basepoint, rng, 200); }));
            len.push_back(guarded("length", tol::ads_length, [&] { return verify_ads_length(s.lam, s.basepoint, rng, 10); }));
        }
        return std::vector{worst_of("earthquake", eq), worst_of("ads-length", len)};
    });

    criterion(9, "holonomies, trace identity, spectral derivatives", [&] {
        // invariant fixtures and group elements preserving them
        auto rot3 = load_lamination(fixture("rot3.json"));
        auto one = load_lamination(fixture("one_leaf.json"));
        Mat2 r = rotation_at(Vec3(1, 0, 0), 2 * M_PI / 3);
        Mat2 b = boost_along(one.lam.leaves[0].g, 0.8), R = pi_rotation(Vec3(1, 0, 0));
        struct Case {
            Domain dom;
            Mat2 g, h;
        };
        std::vector<Case> cases{{Domain(rot3.lam, rot3.basepoint), r, r},
                                {Domain(rot3.lam, rot3.basepoint), r, Mat2(r * r)},
                                {Domain(one.lam, one.basepoint), b, R},
                                {Domain(one.lam, one.basepoint), R, b},
                                {Domain(one.lam, one.basepoint), b, b}};
        double e0 = 0, e1 = 0, em = 0;
        for (auto& c : cases) {
            Mat2 gh = c.g * c.h;
            auto f = flat_holonomy(c.dom, so21(gh)), fg = flat_holonomy(c.dom, so21(c.g)), fh = flat_holonomy(c.dom, so21(c.h));
            auto fp = fg * fh;
            e0 = std::max({e0, (f.linear - fp.linear).cwiseAbs().maxCoeff(), (f.translation - fp.translation).norm()});
            Mat2c hg = hyperbolic_holonomy(c.dom, c.g), hh = hyperbolic_holonomy(c.dom, c.h);
            e1 = std::max(e1, proj_dist(hyperbolic_holonomy(c.dom, gh), Mat2c(hg * hh)));
            em = std::max(em, pair_dist(ads_holonomy(c.dom, gh), ads_holonomy(c.dom, c.g) * ads_holonomy(c.dom, c.h)));
        }
        Rng rng(109);
        double tr = 0, dl = 0, dm = 0;
        long ntr = 0;
        Domain dom(five.lam, five.basepoint);
        for (int i = 0; i < 20; ++i) {
            Mat2 g = random_hyperbolic(rng);
            for (double t = 0; t <= 1.0 + 1e-12; t += 0.1, ++ntr)
                tr = std::max(tr, ds_spectrum(hyperbolic_holonomy_scaled(five.lam, five.basepoint, g, t)).residual);
            auto d = spectral_derivative(dom, g, 1e-4);
            dl = std::max({dl, std::abs(d.d_ell_ds), std::abs(d.d_ell_ads)});
            dm = std::max({dm, std::abs(d.d_em_ds - d.margulis0), std::abs(d.d_em_ads - d.margulis0)});
        }
        long nc = cases.size();
        return std::vector{measured("h0", e0, tol::holonomy, nc), measured("h1", e1, tol::holonomy, nc),
                           measured("h-1", em, tol::holonomy, nc), measured("trace", tr, tol::trace, ntr),
                           measured("dl/dt", dl, tol::spectral, 20), measured("dM/dt-M0", dm, tol::spectral, 20)};
    });

    criterion(10, "volume and area", [] {
        using boost::math::quadrature::gauss_kronrod;
        double dv = 0, quad = 0;
        long n = 0;
        for (int k : {-1, 0, 1})
            for (double b : {0.2, 0.5, 0.9, 1.3})
                for (auto [chi, len] : {std::pair{-2.0, 3.0}, std::pair{-4.0, 0.5}, std::pair{-6.0, 2.0}}) {
                    const double h = 1e-4 * b;
                    double fd = (-volume(k, b + 2 * h, chi, len) + 8 * volume(k, b + h, chi, len) -
                                 8 * volume(k, b - h, chi, len) + volume(k, b - 2 * h, chi, len)) /
                                (12 * h);
                    double A = area(k, b, chi, len);
                    dv = std::max(dv, std::abs(fd - A) / std::abs(A));
                    double q = gauss_kronrod<double, 31>::integrate([&](double t) { return area(k, t, chi, len); }, 0, b, 5, 1e-14);
                    quad = std::max(quad, std::abs(q - volume(k, b, chi, len)));
                    ++n;
                }
        return std::vector{measured("dV/db=A", dv, tol::volume_derivative, n), measured("quadrature", quad, tol::quadrature, n)};
    });

    criterion(11, "QD developing maps, Kerr, ray limits", [] {
        using namespace wick::qd;
        Rng rng(111);
        auto tau_for = [&](Kind k) {
            switch (k) {
                case Kind::hyperbolic: return uniform(rng, 1.1, 4);
                case Kind::deSitter: return uniform(rng, 0.1, 0.9);
                default: return uniform(rng, 0.1, 4);
            }
        };
        std::vector<SuiteResult> parts;
        for (Kind k : {Kind::flat, Kind::hyperbolic, Kind::deSitter, Kind::antiDeSitter}) {
            auto f = [k](const Vec3& c) { return as_vector(develop(k, {c[0], c[1], c[2]})); };
            auto g = [k](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return ambient_form(k, a, b); };
            double worst = 0;
            for (int i = 0; i < 200; ++i) {
                Pi0Point p{uniform(rng, -2, 2), uniform(rng, -2, 2), tau_for(k)};
                Mat3 num = numeric_pullback(f, {p.u, p.y, p.tau}, Mat3::Identity(), 1e-5, g);
                worst = std::max(worst, (num - metric(k, p)).cwiseAbs().maxCoeff());
            }
            parts.push_back(measured(kind_name(k), worst, tol::qd_pullback, 200));
        }
        double kerr = 0;
        for (auto [rp, rm] : {std::pair{1.0, 0.5}, std::pair{2.0, 0.3}, std::pair{1.5, 1.2}}) {
            KerrParams kp{rp, rm};
            auto f = [&](const Vec3& q) { return as_vector(develop(Kind::antiDeSitter, kerr_chart(kp, q[0], q[1], q[2]))); };
            auto g = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return ambient_form(Kind::antiDeSitter, a, b); };
            for (int i = 0; i < 100; ++i) {
                double m = 0.05 * (rp - rm);
                Vec3 c(uniform(rng, rm + m, rp - m), uniform(rng, -1, 1), uniform(rng, -1, 1));
                kerr = std::max(kerr, (numeric_pullback(f, c, Mat3::Identity(), 1e-5, g) - kerr_metric_matrix(kp, c[0])).cwiseAbs().maxCoeff());
            }
        }
        parts.push_back(measured("kerr", kerr, tol::qd_pullback, 300));
        // ||D_s - id|| = O(s): observed order over 6 halvings
        double lo = INFINITY, hi = -INFINITY;
        for (int i = 0; i < 20; ++i) {
            Pi0Point p{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, 0.5, 3)};
            auto dev = [&](double s) {
                auto [w, c] = ray(s, p);
                return std::hypot(std::abs(w - cd(p.u, p.y)), c - p.tau);
            };
            double s = 1e-2;
            for (int o = 0; o < 6; ++o, s /= 2) {
                double order = std::log2(dev(s) / dev(s / 2));
                lo = std::min(lo, order), hi = std::max(hi, order);
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "orders in [%.4f, %.4f]", lo, hi);
        parts.push_back({"ray-order |p-1|", std::max(1 - lo, hi - 1), 1 - kRayOrderLo, 120, lo >= kRayOrderLo && hi <= kRayOrderHi, buf});
        // compact set |v|, |w| <= 0.5, c in [0.5, 1]: the first-order constant stays below 1
        double hol = 0;
        for (int i = 0; i < 100; ++i) {
            cd v = std::polar(uniform(rng, 0, 0.5), uniform(rng, -M_PI, M_PI));
            cd w = std::polar(uniform(rng, 0, 0.5), uniform(rng, -M_PI, M_PI));
            double c = uniform(rng, 0.5, 1);
            auto [w2, c2] = ray_holonomy(1e-6, v, {w, c});
            hol = std::max({hol, std::abs(w2 - (w + v)), std::abs(c2 - c)});
        }
        parts.push_back(measured("ray-holonomy", hol, kRayHolonomy, 100));
        return parts;
    });

    criterion(12, "standard approximation convergence", [] {
        Limit lim;
        // query sets: points across and around the band, off the approximating leaves
        std::vector<std::pair<Vec3, double>> rho_q;  // (x, s)
        for (int i = 0; i < 2000; ++i) {
            double s = -0.25 + 1.5 * (i + 0.5 * std::sqrt(2.0) - 0.2) / 2000;
            for (double t : {-1.0, 0.0, 0.7}) rho_q.push_back({lim.leaf_point(s, t), s});
        }
        std::vector<std::pair<Vec3, double>> t_q;  // (p, T_inf)
        double oracle = 0;
        for (int i = 0; i < 200; ++i) {
            double s = -0.25 + 1.5 * (i + 0.5 * std::sqrt(3.0) - 0.4) / 200;
            for (double t : {-0.8, 0.0, 0.6})
                for (double T : {0.5, 1.0, 2.0}) {
                    Vec3 x = lim.leaf_point(s, t);
                    Vec3 p = lim.rho(s) + T * x;
                    oracle = std::max(oracle, std::abs(lim.T(p) - T));
                    t_q.push_back({p, T});
                }
        }
        std::vector<int> ns;
        std::vector<double> er, et;
        for (int n = 4; n <= 256; n *= 2) {
            Domain dom(approximate(lim.fam, n), lim.x0);
            double a = 0, b = 0;
            for (auto& [x, s] : rho_q) a = std::max(a, (dom.rho(x) - lim.rho(s)).norm());
            for (auto& [p, T] : t_q) b = std::max(b, std::abs(dom.ct_frame(p).T - T));
            ns.push_back(n), er.push_back(a), et.push_back(b);
        }
        auto [orho, mrho] = order_of(ns, er);
        auto [ot, mt] = order_of(ns, et);
        auto part = [](const char* name, double order, bool mono, long n, const std::vector<double>& es) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "order %.3f%s, ", order, mono ? "" : " non-monotone");
            return SuiteResult{name, order, kApproxOrder, n, mono && order >= kApproxOrder, buf + series(es)};
        };
        return std::vector{measured("T_inf oracle", oracle, kOracleAgreement, long(t_q.size())),
                           part("rho order", orho, mrho, long(rho_q.size()), er),
                           part("T order", ot, mt, long(t_q.size()), et)};
    });

    criterion(13, "CLI determinism and exit codes", [] {
        std::string args = "verify " + fixture("five_leaves.json") + " --suite all --samples 100 --seed 13";
        auto a = run_cli(args), b = run_cli(args);
        auto c = run_cli(args + " --format csv"), d = run_cli(args + " --format csv");
        bool same = a.out == b.out && c.out == d.out && a.code == b.code && !a.out.empty();
        long checked = 0, wrong = 0;
        std::string bad;
        for (const auto& e : fs::directory_iterator(fixture("corpus"))) {
            std::string name = e.path().filename().string();
            int expected = name.rfind("ok_", 0) == 0 ? 0 : name.rfind("invalid_", 0) == 0 ? 1 : 2;
            ++checked;
            if (run_cli("validate " + e.path().string()).code != expected) ++wrong, bad += name + " ";
        }
        for (auto [args, expected] : {std::pair{std::string(""), 2}, std::pair{std::string("frobnicate"), 2},
                                      std::pair{"frame " + fixture("one_leaf.json") + " --point 1,0", 2},
                                      std::pair{std::string("volume --kappa 0 --b 1 --chi -2 --lamlength 3"), 0}}) {
            ++checked;
            if (run_cli(args).code != expected) ++wrong, bad += "[" + args + "] ";
        }
        return std::vector{SuiteResult{"byte-identical", same ? 0.0 : 1.0, 0, 4, same, ""},
                           SuiteResult{"exit-codes", double(wrong), 0, checked, wrong == 0, bad}};
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures ? 1 : 0;
}
