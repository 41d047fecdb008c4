#include "steady/config.hpp"

#include "steady/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace steady {
namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& key, const std::string& what) {
    std::string where;
    if (node.IsDefined() && node.Mark().line >= 0) where = "line " + std::to_string(node.Mark().line + 1) + ": ";
    throw SolverError(ErrorKind::InvalidConfig, where + "'" + key + "' " + what);
}

void only_keys(const YAML::Node& map, const std::string& section, const std::set<std::string>& allowed) {
    if (!map) return;
    if (!map.IsMap()) fail(map, section, "must be a mapping");
    for (const auto& kv : map) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key)) fail(kv.first, section + "." + key, "is not a recognised key");
    }
}

template <typename T>
T get(const YAML::Node& map, const std::string& section, const std::string& key, T fallback) {
    if (!map) return fallback;
    const YAML::Node n = map[key];
    if (!n) return fallback;
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        fail(n, section + "." + key, "has the wrong type");
    }
}

std::vector<double> number_list(const YAML::Node& n, const std::string& key) {
    if (!n.IsSequence()) fail(n, key, "must be a list of numbers");
    std::vector<double> out;
    for (const auto& e : n) {
        try {
            out.push_back(e.as<double>());
        } catch (const YAML::Exception&) {
            fail(e, key, "contains a non-numeric entry");
        }
    }
    return out;
}

BoundaryTrace realize(const YAML::Node& n, const std::string& key, const StripGrid& g, Side side) {
    if (!n || n.IsNull()) return BoundaryTrace::zero(g, side);
    only_keys(n, key, {"fourier", "samples"});
    if (n["fourier"] && n["samples"]) fail(n, key, "must give either fourier or samples, not both");
    if (n["samples"]) {
        auto v = number_list(n["samples"], key + ".samples");
        if (v.size() != g.nx())
            fail(n["samples"], key + ".samples",
                 "has " + std::to_string(v.size()) + " entries, expected nx = " + std::to_string(g.nx()));
        return BoundaryTrace(std::move(v), side);
    }
    BoundaryTrace t = BoundaryTrace::zero(g, side);
    const YAML::Node terms = n["fourier"];
    if (!terms) return t;
    if (!terms.IsSequence()) fail(terms, key + ".fourier", "must be a list of [k, a, b] triples");
    for (const auto& term : terms) {
        const auto c = number_list(term, key + ".fourier");
        if (c.size() != 3 || c[0] < 0 || c[0] != std::floor(c[0]))
            fail(term, key + ".fourier", "entries must be [k, a, b] with integer k >= 0");
        const double k = c[0];
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const double arg = 2.0 * std::numbers::pi * k * g.x(i);
            t.values[i] += c[1] * std::cos(arg) + c[2] * std::sin(arg);
        }
    }
    return t;
}

}  // namespace

BvpSpec parse_config(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw SolverError(ErrorKind::InvalidConfig, "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    if (!root.IsMap()) throw SolverError(ErrorKind::InvalidConfig, "config must be a mapping of sections");
    only_keys(root, "config", {"problem", "base_flow", "boundary", "solver", "case_d"});

    const YAML::Node prob = root["problem"];
    if (!prob) throw SolverError(ErrorKind::InvalidConfig, "missing [problem] section");
    only_keys(prob, "problem", {"case", "L", "nx", "ny", "flux_J"});
    if (!prob["case"]) fail(prob, "problem.case", "is required");

    BvpSpec s;
    s.kind = parse_case(get<std::string>(prob, "problem", "case", ""));
    s.L = get<double>(prob, "problem", "L", 1.0);
    const int nx = get<int>(prob, "problem", "nx", 128);
    const int ny = get<int>(prob, "problem", "ny", 129);
    if (nx < 4 || nx % 2 != 0) fail(prob["nx"], "problem.nx", "must be even and at least 4");
    if (ny < 3) fail(prob["ny"], "problem.ny", "must be at least 3");
    if (!(s.L > 0.0) || !std::isfinite(s.L)) fail(prob["L"], "problem.L", "must be positive");
    s.nx = static_cast<std::size_t>(nx);
    s.ny = static_cast<std::size_t>(ny);
    if (prob["flux_J"]) s.flux_J = get<double>(prob, "problem", "flux_J", 0.0);

    const YAML::Node base = root["base_flow"];
    only_keys(base, "base_flow", {"kind", "epsilon", "speed"});
    s.base.kind = get<std::string>(base, "base_flow", "kind", "uniform");
    s.base.epsilon = get<double>(base, "base_flow", "epsilon", 0.0);
    s.base.speed = get<double>(base, "base_flow", "speed", 1.0);
    if (s.base.kind != "uniform" && s.base.kind != "harmonic")
        fail(base["kind"], "base_flow.kind", "must be uniform or harmonic");
    if (s.base.kind == "harmonic" && !(std::abs(s.base.epsilon) < 1.0))
        fail(base["epsilon"], "base_flow.epsilon", "must satisfy |epsilon| < 1");
    if (s.base.kind == "uniform" && s.base.speed == 0.0)
        fail(base["speed"], "base_flow.speed", "must be non-zero");

    const StripGrid g = s.grid();
    const YAML::Node bnd = root["boundary"];
    only_keys(bnd, "boundary", {"f_minus", "f_plus", "h_minus", "h_plus"});
    s.f_minus = realize(bnd ? bnd["f_minus"] : YAML::Node(), "boundary.f_minus", g, Side::Bottom);
    s.h_minus = realize(bnd ? bnd["h_minus"] : YAML::Node(), "boundary.h_minus", g, Side::Bottom);
    s.h_plus = realize(bnd ? bnd["h_plus"] : YAML::Node(), "boundary.h_plus", g, Side::Top);
    if (bnd && bnd["f_plus"]) s.f_plus = realize(bnd["f_plus"], "boundary.f_plus", g, Side::Top);

    const YAML::Node sol = root["solver"];
    only_keys(sol, "solver", {"tol", "max_iter", "compat_tol"});
    s.tol = get<double>(sol, "solver", "tol", 1e-10);
    s.max_iter = get<int>(sol, "solver", "max_iter", 100);
    s.compat_tol = get<double>(sol, "solver", "compat_tol", 1e-8);
    if (!(s.tol > 0.0)) fail(sol["tol"], "solver.tol", "must be positive");
    if (s.max_iter < 1) fail(sol["max_iter"], "solver.max_iter", "must be at least 1");

    const YAML::Node cd = root["case_d"];
    only_keys(cd, "case_d", {"T"});
    if (cd && cd["T"]) {
        const YAML::Node T = cd["T"];
        only_keys(T, "case_d.T", {"shift", "samples"});
        if (T["samples"]) {
            auto v = number_list(T["samples"], "case_d.T.samples");
            if (v.size() != s.nx) fail(T["samples"], "case_d.T.samples", "must have nx entries");
            s.T_samples = std::move(v);
        } else {
            s.T_shift = get<double>(T, "case_d.T", "shift", 0.0);
        }
    }
    return s;
}

BvpSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SolverError(ErrorKind::InvalidConfig, "cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace steady
