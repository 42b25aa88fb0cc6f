#include "predprey/manifest.hpp"

#include <json.hpp>

#include "predprey/csv.hpp"
#include "predprey/errors.hpp"
#include "predprey/version.hpp"

namespace predprey {

using nlohmann::json;

namespace {

json model_json(const ModelParams& p) {
    json j{{"r0", p.r0},       {"eta", p.eta},
           {"alpha", p.alpha}, {"gamma_tilde", p.gamma_tilde},
           {"Gamma", p.Gamma}, {"mu", p.mu},
           {"xi", p.xi},       {"d1", p.d1},
           {"d2", p.d2},       {"d3", p.d3}};
    if (p.epsilon) j["epsilon"] = *p.epsilon;
    return j;
}

ModelParams model_from(const json& j) {
    ModelParams p;
    p.r0 = j.at("r0");
    p.eta = j.at("eta");
    p.alpha = j.at("alpha");
    p.gamma_tilde = j.at("gamma_tilde");
    p.Gamma = j.at("Gamma");
    p.mu = j.at("mu");
    p.xi = j.at("xi");
    p.d1 = j.at("d1");
    p.d2 = j.at("d2");
    p.d3 = j.at("d3");
    if (j.contains("epsilon")) p.epsilon = double(j.at("epsilon"));
    return p;
}

}  // namespace

std::string to_json(const RunManifest& m) {
    json j;
    j["tool"] = m.tool;
    j["version"] = m.version.empty() ? kVersion : m.version;
    j["command"] = m.command;
    j["seed"] = m.seed;
    j["threads"] = m.threads;
    j["model"] = model_json(m.model);
    if (m.has_nondim) {
        j["nondim"] = {{"r", m.nondim.r},     {"nu", m.nondim.nu},   {"gamma", m.nondim.gamma},
                       {"Gamma", m.nondim.Gamma}, {"mu", m.nondim.mu}, {"D1", m.nondim.D1},
                       {"D2", m.nondim.D2},   {"D3", m.nondim.D3}};
        j["scaling"] = {{"Theta", m.map.Theta}, {"Sigma", m.map.Sigma}, {"Pi", m.map.Pi}};
    }
    if (m.has_grid) {
        j["grid"] = {{"dim", m.grid.dim}, {"nx", m.grid.nx}, {"ny", m.grid.ny},
                     {"lx", m.grid.lx},   {"ly", m.grid.ly}};
    }
    j["solver"] = {{"dt_max", m.solver.dt_max},
                   {"cfl_safety", m.solver.cfl_safety},
                   {"t_end", m.solver.t_end},
                   {"newton_tol", m.solver.newton_tol},
                   {"newton_max_iters", m.solver.newton_max_iters},
                   {"output_stride", m.solver.output_stride},
                   {"snapshot_stride", m.solver.snapshot_stride}};
    return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("manifest parse error: ") + e.what());
    }
    RunManifest m;
    m.tool = j.at("tool");
    m.version = j.at("version");
    m.command = j.value("command", "");
    m.seed = j.at("seed");
    m.threads = j.at("threads");
    m.model = model_from(j.at("model"));
    if (j.contains("nondim")) {
        m.has_nondim = true;
        const json& n = j["nondim"];
        m.nondim = {n.at("r"),  n.at("nu"), n.at("gamma"), n.at("Gamma"),
                    n.at("mu"), n.at("D1"), n.at("D2"),    n.at("D3")};
        const json& s = j.at("scaling");
        m.map = {s.at("Theta"), s.at("Sigma"), s.at("Pi")};
    }
    if (j.contains("grid")) {
        m.has_grid = true;
        const json& g = j["grid"];
        if (int(g.at("dim")) == 1)
            m.grid = Grid::line(g.at("nx"), g.at("lx"));
        else
            m.grid = Grid::rect(g.at("nx"), g.at("ny"), g.at("lx"), g.at("ly"));
    }
    const json& s = j.at("solver");
    m.solver.dt_max = s.at("dt_max");
    m.solver.cfl_safety = s.at("cfl_safety");
    m.solver.t_end = s.at("t_end");
    m.solver.newton_tol = s.at("newton_tol");
    m.solver.newton_max_iters = s.at("newton_max_iters");
    m.solver.output_stride = s.at("output_stride");
    m.solver.snapshot_stride = s.at("snapshot_stride");
    return m;
}

void write_manifest(const std::string& dir, const RunManifest& m) {
    write_file(dir + "/run.json", to_json(m));
}

}  // namespace predprey
