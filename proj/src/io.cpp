#include "wick/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace wick {

using nlohmann::json;

namespace {
double number(const json& j, const std::string& field) {
    if (!j.is_number()) throw Error("ParseError", "field '" + field + "' must be a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) throw Error("ParseError", "field '" + field + "' must be finite");
    return v;
}

std::pair<double, double> endpoints(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) throw Error("ParseError", "field '" + field + "' must be [theta1, theta2]");
    return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

Geodesic make_geodesic(double a, double b, const std::string& field) {
    try {
        return geodesic(a, b);
    } catch (const Error& e) {
        throw Error("ValidationError", field + ": " + e.what());
    }
}
}  // namespace

DomainSpec parse_lamination(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("ParseError", e.what());
    }
    if (!doc.is_object()) throw Error("ParseError", "top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "support" && it.key() != "leaves" && it.key() != "basepoint")
            throw Error("ParseError", "unknown field '" + it.key() + "'");

    DomainSpec spec;
    if (doc.contains("basepoint")) {
        const auto& b = doc["basepoint"];
        if (!b.is_array() || b.size() != 3) throw Error("ParseError", "field 'basepoint' must be [x0, x1, x2]");
        Vec3 x(number(b[0], "basepoint[0]"), number(b[1], "basepoint[1]"), number(b[2], "basepoint[2]"));
        // accept decimal round-off, nothing more
        if (std::abs(mink(x, x) + 1) > 1e-6 || x[0] <= 0)
            throw Error("ValidationError", "basepoint is not on the hyperboloid");
        spec.basepoint = to_h2(x);
    }

    if (!doc.contains("leaves")) throw Error("ParseError", "missing field 'leaves'");
    const auto& leaves = doc["leaves"];
    if (!leaves.is_array()) throw Error("ParseError", "field 'leaves' must be an array");
    for (size_t i = 0; i < leaves.size(); ++i) {
        std::string f = "leaves[" + std::to_string(i) + "]";
        const auto& l = leaves[i];
        if (!l.is_object() || !l.contains("endpoints") || !l.contains("weight"))
            throw Error("ParseError", f + " needs 'endpoints' and 'weight'");
        auto [a, b] = endpoints(l["endpoints"], f + ".endpoints");
        spec.lam.leaves.push_back({make_geodesic(a, b, f), number(l["weight"], f + ".weight")});
    }

    if (doc.contains("support")) {
        const auto& s = doc["support"];
        if (s.is_string()) {
            if (s.get<std::string>() != "H2") throw Error("ParseError", "support must be \"H2\" or {\"boundary\": [...]}");
        } else if (s.is_object() && s.contains("boundary") && s["boundary"].is_array()) {
            const auto& bs = s["boundary"];
            for (size_t i = 0; i < bs.size(); ++i) {
                std::string f = "support.boundary[" + std::to_string(i) + "]";
                const auto& e = bs[i];
                std::pair<double, double> ab;
                int side = 0;
                if (e.is_array()) {
                    ab = endpoints(e, f);
                } else if (e.is_object() && e.contains("endpoints")) {
                    ab = endpoints(e["endpoints"], f + ".endpoints");
                    if (e.contains("side")) {
                        double sd = number(e["side"], f + ".side");
                        if (sd != 1 && sd != -1) throw Error("ParseError", f + ".side must be 1 or -1");
                        side = (int)sd;
                    }
                } else {
                    throw Error("ParseError", f + " must be [a, b] or {\"endpoints\": [a, b], \"side\": +-1}");
                }
                Geodesic g = make_geodesic(ab.first, ab.second, f);
                if (side == 0) side = mink(spec.basepoint, g.n) >= 0 ? 1 : -1;
                if (side < 0) g.n = -g.n;
                spec.lam.boundary.push_back(g);
            }
        } else {
            throw Error("ParseError", "support must be \"H2\" or {\"boundary\": [...]}");
        }
    }

    auto d = validate(spec.lam);
    if (!d.ok) {
        std::string msg;
        for (const auto& s : d.failures) msg += (msg.empty() ? "" : "; ") + s;
        throw Error("ValidationError", msg);
    }
    if (!spec.lam.in_support(spec.basepoint, 0)) throw Error("ValidationError", "basepoint outside the support");
    for (size_t i = 0; i < spec.lam.leaves.size(); ++i)
        if (std::abs(mink(spec.basepoint, spec.lam.leaves[i].g.n)) < 1e-6)
            throw Error("ValidationError", "basepoint lies on leaf " + std::to_string(i));
    return spec;
}

DomainSpec load_lamination(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_lamination(ss.str());
}

}  // namespace wick
