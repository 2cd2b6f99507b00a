// wick: command line front end
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wick/io.hpp"
#include "wick/qd.hpp"
#include "wick/spectra.hpp"
#include "wick/verify.hpp"

using namespace wick;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& s, size_t n, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(what + ": cannot parse '" + tok + "'");
        }
    }
    if (n && out.size() != n) throw UsageError(what + ": expected " + std::to_string(n) + " comma separated numbers");
    return out;
}

Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <class V>
Json arr(const V& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(num(v[i]));
    return a;
}
Json mat(const Eigen::MatrixXd& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(arr(Eigen::VectorXd(m.row(i).transpose())));
    return a;
}
Json cplx(cd z) { return Json::array({num(z.real()), num(z.imag())}); }

const char* frame_kind(Frame::Kind k) {
    switch (k) {
        case Frame::Kind::Face: return "face";
        case Frame::Kind::Band: return "band";
        default: return "boundary-band";
    }
}

Json frame_json(const Frame& f) {
    Json j;
    j["T"] = num(f.T);
    j["N"] = arr(f.N);
    j["r"] = arr(f.r);
    j["stratum"] = frame_kind(f.kind);
    j["face"] = f.face;
    if (f.kind != Frame::Kind::Face) {
        j["leaf"] = f.leaf;
        j["s"] = num(f.s);
    }
    return j;
}

Json suite_json(const SuiteResult& r) {
    Json j;
    j["suite"] = r.name;
    j["value"] = num(r.value);
    j["tolerance"] = r.tolerance;
    j["samples"] = r.samples;
    j["pass"] = r.pass;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

// ---- CSV: nested keys flattened with '.', one row per result entry
void flatten(const Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out.push_back({key, j.get<std::string>()});
    } else {
        out.push_back({key, j.dump()});
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string to_csv(const Json& results) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    if (results.is_array())
        for (const auto& r : results) {
            rows.emplace_back();
            flatten(r, "", rows.back());
        }
    else {
        rows.emplace_back();
        flatten(results, "", rows.back());
    }
    std::vector<std::string> header;
    for (const auto& r : rows)
        for (const auto& [k, v] : r)
            if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_cell(header[i]);
    os << "\n";
    for (const auto& r : rows) {
        for (size_t i = 0; i < header.size(); ++i) {
            if (i) os << ",";
            for (const auto& [k, v] : r)
                if (k == header[i]) {
                    os << csv_cell(v);
                    break;
                }
        }
        os << "\n";
    }
    return os.str();
}

struct Common {
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;
};

void emit(const Common& c, const std::string& command, const Json& inputs, const Json& results) {
    std::string text;
    if (c.format == "csv") {
        text = to_csv(results);
    } else {
        Json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["seed"] = c.seed;
        doc["results"] = results;
        text = doc.dump(2) + "\n";
    }
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.output, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + c.output + "'");
        out << text;
    }
}

Vec3 point3(const std::string& s) {
    auto v = parse_list(s, 3, "--point");
    return {v[0], v[1], v[2]};
}

// ---- verbs

int cmd_validate(const Common& c, const std::string& file) {
    Json in{{"file", file}};
    try {
        auto spec = load_lamination(file);
        auto d = validate(spec.lam);
        Json r;
        r["valid"] = true;
        r["leaves"] = spec.lam.leaves.size();
        r["support"] = spec.lam.full_plane() ? "H2" : "half-planes";
        r["basepoint"] = arr(spec.basepoint);
        r["min_separation"] = num(d.min_separation);
        Json asym = Json::array();
        for (auto [i, j] : d.asymptotic) asym.push_back({i, j});
        r["asymptotic_pairs"] = asym;
        emit(c, "validate", in, r);
        return 0;
    } catch (const Error& e) {
        if (e.code != "ValidationError") throw;
        Json r;
        r["valid"] = false;
        r["error"] = e.what();
        emit(c, "validate", in, r);
        return 1;
    }
}

int cmd_frame(const Common& c, const std::string& file, const std::string& point) {
    auto spec = load_lamination(file);
    Domain dom(spec.lam, spec.basepoint);
    Vec3 p = point3(point);
    emit(c, "frame", {{"file", file}, {"point", arr(p)}}, frame_json(dom.ct_frame(p)));
    return 0;
}

Json develop_one(const Domain& dom, const Vec3& p, Kind kind) {
    Json j;
    j["target"] = kind_name(kind);
    switch (kind) {
        case Kind::flat: j["frame"] = frame_json(dom.ct_frame(p)); break;
        case Kind::hyperbolic: {
            Vec4 v = wick_rotate(dom, p);
            auto [w, h] = hyperboloid_to_halfspace(v);
            j["point"] = arr(v);
            j["halfspace"] = Json::array({num(w.real()), num(w.imag()), num(h)});
            break;
        }
        case Kind::deSitter: j["point"] = arr(ds(dom, p)); break;
        case Kind::antiDeSitter: {
            Mat2 m = ads(dom, p);
            j["point"] = mat(m);
            j["det"] = num(m.determinant());
            break;
        }
    }
    return j;
}

int cmd_develop(const Common& c, const std::string& file, const std::string& point, const std::string& target) {
    auto spec = load_lamination(file);
    Domain dom(spec.lam, spec.basepoint);
    Vec3 p = point3(point);
    Json in{{"file", file}, {"point", arr(p)}, {"target", target}};
    Json res = Json::array();
    if (target == "projective") {
        auto pp = projective(dom, p);
        res.push_back({{"target", "projective"}, {"z", cplx(pp.z)}, {"sphere", arr(pp.sphere)}, {"at_infinity", pp.at_infinity}});
    } else if (target == "all") {
        double T = dom.ct_frame(p).T;
        for (Kind k : {Kind::flat, Kind::hyperbolic, Kind::deSitter, Kind::antiDeSitter}) {
            if ((k == Kind::hyperbolic && !(T > 1)) || (k == Kind::deSitter && !(T < 1))) continue;
            res.push_back(develop_one(dom, p, k));
        }
    } else {
        Kind k;
        try {
            k = parse_kind(target);
        } catch (const Error&) {
            throw UsageError("unknown target '" + target + "'");
        }
        res.push_back(develop_one(dom, p, k));
    }
    emit(c, "develop", in, res);
    return 0;
}

int cmd_sample(const Common& c, const std::string& file, double level, int samples, const std::string& target,
               double radius) {
    auto spec = load_lamination(file);
    Domain dom(spec.lam, spec.basepoint);
    Kind kind = parse_kind(target);
    if (kind == Kind::hyperbolic && !(level > 1)) throw UsageError("hyperbolic target needs --level > 1");
    if (kind == Kind::deSitter && !(level < 1)) throw UsageError("desitter target needs --level < 1");
    Rng rng(c.seed);
    Json rows = Json::array();
    for (int i = 0; i < samples; ++i) {
        auto s = sample_domain(rng, dom, level, level, 1e-2, radius);
        Json row;
        row["p"] = arr(s.p);
        row["N"] = arr(s.expected.N);
        row["r"] = arr(s.expected.r);
        row["stratum"] = frame_kind(s.expected.kind);
        switch (kind) {
            case Kind::flat: break;
            case Kind::hyperbolic: row["image"] = arr(wick_rotate(dom, s.p)); break;
            case Kind::deSitter: row["image"] = arr(ds(dom, s.p)); break;
            case Kind::antiDeSitter: {
                Mat2 m = ads(dom, s.p);
                row["image"] = Json::array({num(m(0, 0)), num(m(0, 1)), num(m(1, 0)), num(m(1, 1))});
                break;
            }
        }
        rows.push_back(row);
    }
    emit(c, "sample-surface", {{"file", file}, {"level", level}, {"samples", samples}, {"target", target}, {"radius", radius}},
         rows);
    return 0;
}

const std::vector<std::string> kSuites = {"decomposition", "gradient",    "fundamental", "monotone",       "cocycle",
                                          "derivative",    "pullback",    "near-band",   "completion",     "klein",
                                          "earthquake",    "ads-length",  "gluing",      "single-geodesic"};

int cmd_verify(const Common& c, const std::string& file, const std::string& suite, const std::string& kind_s, int samples) {
    if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
        throw UsageError("unknown suite '" + suite + "'");
    std::vector<Kind> kinds;
    if (kind_s == "all")
        kinds = {Kind::flat, Kind::hyperbolic, Kind::deSitter, Kind::antiDeSitter};
    else
        try {
            kinds = {parse_kind(kind_s)};
        } catch (const Error&) {
            throw UsageError("unknown kind '" + kind_s + "'");
        }
    if (samples <= 0) throw UsageError("--samples must be positive");
    auto spec = load_lamination(file);
    Domain dom(spec.lam, spec.basepoint);
    Rng rng(c.seed);
    Json res = Json::array();
    bool ok = true;
    auto run = [&](const std::string& name, double tolerance, auto&& f) {
        SuiteResult r;
        try {
            r = f();
        } catch (const std::exception& e) {
            r = fail_with(name, tolerance, e);
        }
        ok = ok && r.pass;
        res.push_back(suite_json(r));
    };
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("decomposition")) run("decomposition", tol::decomposition, [&] { return verify_decomposition(dom, rng, samples); });
    if (want("gradient")) run("gradient", tol::gradient, [&] { return verify_gradient(dom, rng, samples); });
    if (want("fundamental")) run("fundamental-inequality", tol::fundamental, [&] { return verify_fundamental(dom, rng, samples); });
    if (want("monotone")) run("monotone-pair", tol::fundamental, [&] { return verify_monotone(dom, rng, samples); });
    if (want("cocycle"))
        for (cd z : {cd(1), cd(-1), cd(0, 1), cd(0.3, 0.4)})
            run("cocycle", tol::cocycle, [&] { return verify_cocycle(spec.lam, rng, samples, z); });
    if (want("derivative")) run("derivative-at-zero", tol::derivative, [&] { return verify_derivative(spec.lam, rng, samples); });
    for (Kind k : kinds) {
        if (want("pullback")) run("pullback-" + kind_name(k), tol::pullback, [&] { return verify_pullback(dom, k, rng, samples); });
        if (want("near-band"))
            run("pullback-near-band-" + kind_name(k), tol::pullback_near_band,
                [&] { return verify_pullback_near_band(dom, k, rng, samples); });
    }
    if (want("completion")) run("completion-distance", tol::completion, [&] { return verify_completion(dom, rng, samples); });
    if (want("klein")) run("klein-fit", tol::klein, [&] { return verify_klein(dom, rng, samples); });
    if (want("earthquake"))
        run("earthquake-inverse", tol::earthquake, [&] { return verify_earthquake(spec.lam, spec.basepoint, rng, samples); });
    if (want("ads-length"))
        run("ads-bend-length", tol::ads_length,
            [&] { return verify_ads_length(spec.lam, spec.basepoint, rng, std::max(1, samples / 20)); });
    if (want("single-geodesic"))
        run("single-geodesic", tol::single_geodesic, [&] { return verify_single_geodesic(rng, std::max(1, samples / 4)); });
    if (want("gluing")) run("branch-gluing", tol::gluing, [&] { return verify_gluing(0.8); });
    emit(c, "verify", {{"file", file}, {"suite", suite}, {"kind", kind_s}, {"samples", samples}}, res);
    return ok ? 0 : 1;
}

int cmd_spectra(const Common& c, const std::string& file, const std::string& gamma_s, double h) {
    auto g = parse_list(gamma_s, 4, "--gamma");
    Mat2 gamma;
    gamma << g[0], g[1], g[2], g[3];
    double det = gamma.determinant();
    if (!(det > 0)) throw UsageError("--gamma must have positive determinant");
    gamma /= std::sqrt(det);
    auto spec = load_lamination(file);
    Domain dom(spec.lam, spec.basepoint);
    Json r;
    r["gamma"] = mat(gamma);
    r["translation_length"] = num(translation_length(gamma));
    bool inv = is_invariant(spec.lam, so21(gamma));
    r["invariant"] = inv;
    if (inv) {
        AffineIsom h0 = flat_holonomy(dom, so21(gamma));
        r["flat"] = {{"linear", mat(h0.linear)}, {"translation", arr(h0.translation)}};
        if (std::abs(gamma.trace()) > 2) r["flat"]["margulis"] = num(margulis(gamma, h0.translation));
        Mat2c h1 = hyperbolic_holonomy(dom, gamma);
        auto s1 = ds_spectrum(h1);
        r["desitter"] = {{"trace", cplx(h1.trace())}, {"ell", num(s1.ell)}, {"em", num(s1.em)},
                         {"branch_ambiguous", s1.branch_ambiguous}, {"residual", num(s1.residual)}};
        IsomPair hm = ads_holonomy(dom, gamma);
        try {
            auto sm = ads_spectrum(hm);
            r["antidesitter"] = {{"ell", num(sm.ell)}, {"em", num(sm.em)}};
        } catch (const Error& e) {
            r["antidesitter"] = {{"error", e.what()}};
        }
    }
    if (std::abs(gamma.trace()) > 2) {
        auto d = spectral_derivative(dom, gamma, h);
        r["derivative"] = {{"d_ell_ds", num(d.d_ell_ds)}, {"d_em_ds", num(d.d_em_ds)}, {"d_ell_ads", num(d.d_ell_ads)},
                           {"d_em_ads", num(d.d_em_ads)}, {"margulis0", num(d.margulis0)}};
    }
    emit(c, "spectra", {{"file", file}, {"gamma", g}, {"h", h}}, r);
    return 0;
}

int cmd_volume(const Common& c, int kappa, double b, double chi, double len) {
    if (kappa < -1 || kappa > 1) throw UsageError("--kappa must be -1, 0 or 1");
    Json r;
    r["A"] = num(area(kappa, b, chi, len));
    r["V"] = num(volume(kappa, b, chi, len));
    emit(c, "volume", {{"kappa", kappa}, {"b", b}, {"chi", chi}, {"lamlength", len}}, r);
    return 0;
}

Json value_json(const qd::Value& v) {
    Json j;
    j["kind"] = kind_name(v.kind);
    switch (v.kind) {
        case Kind::flat: j["point"] = arr(v.flat); break;
        case Kind::hyperbolic:
            j["point"] = arr(v.v);
            j["halfspace"] = Json::array({num(v.w.real()), num(v.w.imag()), num(v.c)});
            break;
        case Kind::deSitter: j["point"] = arr(v.v); break;
        case Kind::antiDeSitter:
            j["point"] = mat(v.m);
            j["det"] = num(v.m.determinant());
            break;
    }
    return j;
}

struct QdOptions {
    std::string kind = "all", point = "0,0,1", translate, kerr, lattice;
    bool rotation = false;
    double radius = NAN, phi = 0, v = 0, ray = NAN;
};

int cmd_qd(const Common& c, const QdOptions& o) {
    Json in;
    Json r;
    if (!o.kerr.empty()) {
        auto k = parse_list(o.kerr, 2, "--kerr");
        if (std::isnan(o.radius)) throw UsageError("--kerr needs --radius");
        qd::KerrParams kp{k[0], k[1]};
        in = {{"kerr", k}, {"radius", o.radius}, {"phi", o.phi}, {"v", o.v}};
        auto p = qd::kerr_chart(kp, o.radius, o.phi, o.v);
        auto co = qd::kerr_metric(kp, o.radius);
        r["M"] = num(kp.M());
        r["J"] = num(kp.J());
        r["pi0"] = {num(p.u), num(p.y), num(p.tau)};
        r["f"] = num(co.f);
        r["n_phi"] = num(co.n_phi);
        r["metric"] = mat(qd::kerr_metric_matrix(kp, o.radius));
        r["image"] = value_json(qd::develop(Kind::antiDeSitter, p));
    } else if (!o.lattice.empty()) {
        std::vector<cd> gens;
        std::stringstream ss(o.lattice);
        std::string g;
        while (std::getline(ss, g, ';')) {
            auto v = parse_list(g, 2, "--lattice");
            gens.push_back({v[0], v[1]});
        }
        if (gens.empty() || gens.size() > 2) throw UsageError("--lattice takes one or two generators p,q[;p,q]");
        Json gj = Json::array();
        for (cd z : gens) gj.push_back(cplx(z));
        in = {{"lattice", gj}, {"rotation", o.rotation}};
        auto lc = qd::lattice_check(gens, o.rotation);
        r["type"] = lc.torus ? "torus" : "cylinder";
        if (lc.torus) r["modulus"] = cplx(lc.modulus);
        else r["a"] = cplx(lc.a);
        r["rotation"] = lc.rotation;
    } else {
        auto pv = parse_list(o.point, 3, "--point");
        qd::Pi0Point p{pv[0], pv[1], pv[2]};
        if (!(p.tau > 0)) throw UsageError("--point needs tau > 0");
        in = {{"kind", o.kind}, {"point", pv}};
        std::vector<Kind> kinds;
        if (o.kind == "all") kinds = {Kind::flat, Kind::hyperbolic, Kind::deSitter, Kind::antiDeSitter};
        else kinds = {parse_kind(o.kind)};
        std::optional<cd> v;
        if (!o.translate.empty()) {
            auto t = parse_list(o.translate, 2, "--translate");
            v = cd(t[0], t[1]);
            in["translate"] = t;
            in["rotation"] = o.rotation;
        }
        Json res = Json::array();
        for (Kind k : kinds) {
            Json j = value_json(qd::develop(k, p));
            j["metric"] = mat(qd::metric(k, p));
            if (v) {
                qd::Value img = qd::holonomy(k, *v, o.rotation).apply(qd::develop(k, p));
                qd::Value dev = qd::develop(k, qd::translate(p, *v, o.rotation));
                Eigen::VectorXd a = qd::as_vector(img), b = qd::as_vector(dev);
                if (k == Kind::antiDeSitter && (a + b).norm() < (a - b).norm()) b = -b;
                j["holonomy_image"] = value_json(img);
                j["equivariance_residual"] = num((a - b).norm());
            }
            res.push_back(j);
        }
        r["developed"] = res;
        if (!std::isnan(o.ray)) {
            if (!(o.ray > 0)) throw UsageError("--ray must be positive");
            in["ray"] = o.ray;
            auto [w, cc] = qd::ray(o.ray, p);
            r["ray"] = {num(w.real()), num(w.imag()), num(cc)};
        }
    }
    emit(c, "qd", in, r);
    return 0;
}

int cmd_tree(const Common& c, const std::string& file) {
    auto spec = load_lamination(file);
    Domain dom(spec.lam, spec.basepoint);
    auto t = singularity_tree(dom);
    Json r;
    Json verts = Json::array();
    for (size_t i = 0; i < t.vertices.size(); ++i) verts.push_back({{"id", i}, {"rho", arr(t.vertices[i])}});
    Json edges = Json::array();
    for (const auto& e : t.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"leaf", e.leaf}, {"length", num(e.length)}});
    r["base_vertex"] = dom.base_face();
    r["vertices"] = verts;
    r["edges"] = edges;
    emit(c, "tree", {{"file", file}}, r);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wick: flat regular domains, Wick rotations and rescalings"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", common.output, "write the report here instead of stdout");
        sub->add_option("--seed", common.seed, "mt19937_64 seed");
    };

    std::string file, point, target = "all", suite = "all", kind = "all", gamma;
    int samples = 200, kappa = 0;
    double level = 1.0, radius = 2.0, h = 1e-4, b = 0, chi = 0, lamlength = 0;
    QdOptions qo;

    auto* validate_c = app.add_subcommand("validate", "check a lamination file");
    validate_c->add_option("file", file)->required();
    auto* frame_c = app.add_subcommand("frame", "cosmological time frame (T, N, r) of a point");
    frame_c->add_option("file", file)->required();
    frame_c->add_option("--point", point, "x0,x1,x2")->required();
    auto* develop_c = app.add_subcommand("develop", "developing maps of a point");
    develop_c->add_option("file", file)->required();
    develop_c->add_option("--point", point, "x0,x1,x2")->required();
    develop_c->add_option("--target", target, "flat|hyperbolic|desitter|antidesitter|projective|all");
    auto* sample_c = app.add_subcommand("sample-surface", "random points of a level surface and their images");
    sample_c->add_option("file", file)->required();
    sample_c->add_option("--level", level, "cosmological time of the level surface")->check(CLI::PositiveNumber);
    sample_c->add_option("--samples", samples);
    sample_c->add_option("--target", target, "flat|hyperbolic|desitter|antidesitter");
    sample_c->add_option("--radius", radius, "hyperbolic radius of the sampled region");
    auto* verify_c = app.add_subcommand("verify", "run verification suites");
    verify_c->add_option("file", file)->required();
    verify_c->add_option("--suite", suite);
    verify_c->add_option("--kind", kind);
    verify_c->add_option("--samples", samples);
    auto* spectra_c = app.add_subcommand("spectra", "holonomy spectra of a group element");
    spectra_c->add_option("file", file)->required();
    spectra_c->add_option("--gamma", gamma, "a,b,c,d")->required();
    spectra_c->add_option("--step", h, "finite difference step");
    auto* volume_c = app.add_subcommand("volume", "area and volume formulas");
    volume_c->add_option("--kappa", kappa)->required();
    volume_c->add_option("--b", b)->required();
    volume_c->add_option("--chi", chi)->required();
    volume_c->add_option("--lamlength", lamlength)->required();
    auto* qd_c = app.add_subcommand("qd", "spacetimes over the degenerate domain");
    qd_c->add_option("--kind", qo.kind);
    qd_c->add_option("--point", qo.point, "u,y,tau");
    qd_c->add_option("--translate", qo.translate, "p,q");
    qd_c->add_flag("--rotation", qo.rotation);
    qd_c->add_option("--kerr", qo.kerr, "r_plus,r_minus");
    qd_c->add_option("--radius", qo.radius);
    qd_c->add_option("--phi", qo.phi);
    qd_c->add_option("--v", qo.v);
    qd_c->add_option("--lattice", qo.lattice, "p,q[;p,q]");
    qd_c->add_option("--ray", qo.ray, "parameter s of the ray family");
    auto* tree_c = app.add_subcommand("tree", "dual tree of the initial singularity");
    tree_c->add_option("file", file)->required();
    for (auto* s : app.get_subcommands({})) add_common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate_c->parsed()) return cmd_validate(common, file);
        if (frame_c->parsed()) return cmd_frame(common, file, point);
        if (develop_c->parsed()) return cmd_develop(common, file, point, target);
        if (sample_c->parsed()) return cmd_sample(common, file, level, samples, target == "all" ? "flat" : target, radius);
        if (verify_c->parsed()) return cmd_verify(common, file, suite, kind, samples);
        if (spectra_c->parsed()) return cmd_spectra(common, file, gamma, h);
        if (volume_c->parsed()) return cmd_volume(common, kappa, b, chi, lamlength);
        if (qd_c->parsed()) return cmd_qd(common, qo);
        if (tree_c->parsed()) return cmd_tree(common, file);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code == "ValidationError" ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
