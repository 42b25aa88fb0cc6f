// Command-line laboratory for the fast-reaction predator-prey systems and
// their cross-diffusion limits: simulation, equilibrium reports, Turing
// analysis, parameter scans and epsilon-convergence studies.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "predprey/config.hpp"
#include "predprey/convergence.hpp"
#include "predprey/csv.hpp"
#include "predprey/equilibria.hpp"
#include "predprey/errors.hpp"
#include "predprey/kinetics.hpp"
#include "predprey/manifest.hpp"
#include "predprey/solver.hpp"
#include "predprey/svg.hpp"
#include "predprey/turing.hpp"
#include "predprey/version.hpp"

namespace fs = std::filesystem;
using namespace predprey;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitPrecondition = 4;

struct GlobalOpts {
    std::uint64_t seed = 12345;
    int threads = 1;
};

std::string fmt(double v) { return format_double(v); }

void parse_pair(const std::string& s, double& a, double& b, bool& has_b) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        a = std::stod(s);
        has_b = false;
    } else {
        a = std::stod(s.substr(0, comma));
        b = std::stod(s.substr(comma + 1));
        has_b = true;
    }
}

Grid grid_from_flags(const LoadedConfig& cfg, const std::string& grid_flag,
                     const std::string& length_flag) {
    Grid g = cfg.grid;
    int nx = g.nx, ny = g.ny;
    double lx = g.lx, ly = g.dim == 2 ? g.ly : g.lx;
    bool two_d = g.dim == 2;
    if (!grid_flag.empty()) {
        double a, b;
        bool has_b;
        parse_pair(grid_flag, a, b, has_b);
        nx = int(a);
        if (has_b) {
            ny = int(b);
            two_d = true;
        } else {
            two_d = false;
        }
    }
    if (!length_flag.empty()) {
        double a, b;
        bool has_b;
        parse_pair(length_flag, a, b, has_b);
        lx = a;
        if (has_b) ly = b;
    }
    return two_d ? Grid::rect(nx, ny, lx, ly) : Grid::line(nx, lx);
}

RunManifest make_manifest(const std::string& command, const GlobalOpts& g,
                          const LoadedConfig& cfg) {
    RunManifest m;
    m.version = kVersion;
    m.command = command;
    m.seed = g.seed;
    m.threads = g.threads;
    m.model = cfg.model;
    m.solver = cfg.solver;
    if (cfg.model.xi > 0.0 && cfg.model.eta > 0.0) {
        const NondimResult nr = nondimensionalize(cfg.model);
        m.has_nondim = true;
        m.nondim = nr.nd;
        m.map = nr.map;
    }
    return m;
}

// Dimensional coexistence state (N*, P*) of the configured limit system.
bool estar_dim(const ModelParams& p, double& N, double& P) {
    if (p.xi > 0.0) {
        const NondimResult nr = nondimensionalize(p);
        if (!coexistence_exists(nr.nd)) return false;
        const Equilibrium e = coexistence_equilibrium(nr.nd);
        N = e.N * nr.map.Sigma;
        P = e.P * nr.map.Pi;
        return true;
    }
    const HollingPoint hp = holling_point(p);
    if (!hp.coexists) return false;
    N = hp.N;
    P = hp.P;
    return true;
}

std::string interval_str(const Interval& iv) {
    if (iv.empty) return "empty";
    return "(" + fmt(iv.lo) + ", " + fmt(iv.hi) + ")";
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const GlobalOpts& g, const std::string& config_path, const std::string& system,
                 const std::string& grid_flag, const std::string& length_flag, double tend,
                 int snapshots, const std::string& out_dir, const std::string& init, double noise,
                 double N0, double P0) {
    LoadedConfig cfg = load_config(config_path);
    const SystemKind kind = system_kind_from_string(system);
    if (is_micro(kind) && !cfg.model.epsilon)
        throw ConfigError("epsilon required for microscopic runs");
    if ((kind == SystemKind::MicroBdA || kind == SystemKind::LimitBdA) && cfg.model.xi <= 0.0)
        throw ConfigError("system '" + system + "' requires xi > 0 in [model]");
    if ((kind == SystemKind::MicroHolling || kind == SystemKind::LimitHolling) &&
        cfg.model.xi != 0.0)
        throw ConfigError("system '" + system + "' requires xi = 0 in [model]");

    const Grid grid = grid_from_flags(cfg, grid_flag, length_flag);
    if (tend >= 0.0) cfg.solver.t_end = tend;
    cfg.solver.snapshot_stride = snapshots;

    // initial state
    SimState state;
    if (init == "estar-noise" || init == "estar") {
        double Ns, Ps;
        if (!estar_dim(cfg.model, Ns, Ps))
            throw PreconditionError("initial data at E* requested but no coexistence equilibrium "
                                    "exists for these parameters");
        Field N0f(grid.cells(), Ns), P0f(grid.cells(), Ps);
        if (init == "estar-noise") {
            add_uniform_noise(N0f, noise * Ps, g.seed);
            add_uniform_noise(P0f, noise * Ps, g.seed + 1);
        }
        state = is_micro(kind) ? micro_from_limit_data(grid, N0f, P0f, cfg.model)
                               : SimState{};
        if (!is_micro(kind)) {
            state.grid = grid;
            state.micro = false;
            state.N = std::move(N0f);
            state.P = std::move(P0f);
        }
    } else if (init == "homogeneous" || init == "homogeneous-layer") {
        Field N0f(grid.cells(), N0), P0f(grid.cells(), P0);
        if (is_micro(kind)) {
            state = micro_from_limit_data(grid, N0f, P0f, cfg.model,
                                          init == "homogeneous-layer");
        } else {
            state.grid = grid;
            state.micro = false;
            state.N = std::move(N0f);
            state.P = std::move(P0f);
        }
    } else {
        throw ConfigError("unknown --init mode '" + init + "'");
    }
    state.grid = grid;

    const TimeSeries ts = simulate(std::move(state), cfg.model, cfg.solver);

    fs::create_directories(out_dir);
    CsvTable series;
    series.header = {"t", "field", "L1", "L2", "Linf"};
    for (std::size_t s = 0; s < ts.times.size(); ++s)
        for (std::size_t f = 0; f < ts.field_names.size(); ++f)
            series.rows.push_back({fmt(ts.times[s]), ts.field_names[f], fmt(ts.norms[s][f][0]),
                                   fmt(ts.norms[s][f][1]), fmt(ts.norms[s][f][2])});
    write_file(out_dir + "/series.csv", to_csv(series));

    for (std::size_t k = 0; k < ts.snapshots.size(); ++k) {
        const Snapshot& sn = ts.snapshots[k];
        CsvTable snap;
        snap.header = ts.field_names;
        for (int c = 0; c < grid.cells(); ++c) {
            std::vector<std::string> row;
            for (const Field& f : sn.fields) row.push_back(fmt(f[c]));
            snap.rows.push_back(std::move(row));
        }
        write_file(out_dir + "/snap_" + std::to_string(k) + ".csv", to_csv(snap));
    }

    RunManifest m = make_manifest("simulate --system " + system, g, cfg);
    m.has_grid = true;
    m.grid = grid;
    write_manifest(out_dir, m);
    std::cout << "simulated " << system << " to t = " << fmt(ts.times.back()) << ", "
              << ts.times.size() << " samples, " << ts.snapshots.size() << " snapshots -> "
              << out_dir << "\n";
    return 0;
}

// -------------------------------------------------------------- equilibrium

int cmd_equilibrium(const std::string& config_path) {
    const LoadedConfig cfg = load_config(config_path);
    if (cfg.model.xi <= 0.0)
        throw PreconditionError("equilibrium analysis uses the adimensionalized BdA limit system; "
                                "xi = 0 configurations have no such form");
    const NondimResult nr = nondimensionalize(cfg.model);
    const auto reports = classify_equilibria(nr.nd);

    std::cout << "nondimensional parameters: r = " << fmt(nr.nd.r) << ", nu = " << fmt(nr.nd.nu)
              << ", gamma = " << fmt(nr.nd.gamma) << ", Gamma = " << fmt(nr.nd.Gamma)
              << ", mu = " << fmt(nr.nd.mu) << "\n";
    std::cout << "coexistence condition Gamma - 2 mu > 2 gamma mu / nu: "
              << fmt(nr.nd.Gamma - 2 * nr.nd.mu) << " vs " << fmt(2 * nr.nd.gamma * nr.nd.mu / nr.nd.nu)
              << (coexistence_exists(nr.nd) ? "  (E* exists)" : "  (no E*)") << "\n\n";
    for (const auto& r : reports) {
        std::cout << to_string(r.eq.kind) << " (N, P) = (" << fmt(r.eq.N) << ", " << fmt(r.eq.P)
                  << ")\n  J = [" << fmt(r.J11) << ", " << fmt(r.J12) << "; " << fmt(r.J21) << ", "
                  << fmt(r.J22) << "]\n  trace = " << fmt(r.trace) << ", det = " << fmt(r.det)
                  << ", classification: " << to_string(r.classification) << "\n";
    }

    CsvTable t;
    t.header = {"kind", "N", "P", "J11", "J12", "J21", "J22", "trace", "det", "classification"};
    for (const auto& r : reports)
        t.rows.push_back({to_string(r.eq.kind), fmt(r.eq.N), fmt(r.eq.P), fmt(r.J11), fmt(r.J12),
                          fmt(r.J21), fmt(r.J22), fmt(r.trace), fmt(r.det),
                          to_string(r.classification)});
    std::cout << "\n" << to_csv(t);
    return 0;
}

// ------------------------------------------------------------------ turing

int cmd_turing(const std::string& config_path, double length) {
    const LoadedConfig cfg = load_config(config_path);
    if (cfg.model.xi <= 0.0)
        throw PreconditionError("turing analysis of the adimensionalized BdA system needs xi > 0; "
                                "use 'scan' for the Holling variant");
    const NondimResult nr = nondimensionalize(cfg.model);
    if (!coexistence_exists(nr.nd))
        throw NoCoexistenceError(nr.nd.Gamma - 2 * nr.nd.mu, 2 * nr.nd.gamma * nr.nd.mu / nr.nd.nu);
    if (!(nr.nd.D2 > nr.nd.D3))
        throw PreconditionError("turing analysis requires d2 > d3");

    const JacobianStar J = jacobian_at_estar(nr.nd);
    const CrossLinearization cl = cross_linearization(nr.nd.D1, nr.nd.D2, nr.nd.D3, nr.nd);
    const RegionComparison rc = compare_regions(nr.nd.D1, nr.nd.D2, nr.nd.D3, nr.nd);

    std::cout << "E* = (" << fmt(J.N_star) << ", " << fmt(J.P_star) << "), Q* = " << fmt(J.Q_star)
              << "\nJ* = [" << fmt(J.J11) << ", " << fmt(J.J12) << "; " << fmt(J.J21) << ", "
              << fmt(J.J22) << "], trace = " << fmt(J.trace()) << ", det = " << fmt(J.det())
              << "\nJ*_D21 = " << fmt(cl.JD21) << ", J*_D22 = " << fmt(cl.JD22)
              << ", D_P = " << fmt(cl.DP) << "\n";
    if (J.J11 > 0.0) {
        const BoundaryCurves bc = boundary_curves(J, nr.nd.D1, 10.0 * nr.nd.D2, 2);
        std::cout << "Dhat = " << fmt(bc.Dhat) << ", Dhat1 = " << fmt(bc.Dhat1)
                  << ", Dhat2 = " << fmt(bc.Dhat2) << "\n";
    } else {
        std::cout << "J*_11 <= 0: no Turing instability for any diffusion rates\n";
    }
    std::cout << "coefficients: A_L = " << fmt(rc.AL) << ", A_C = " << fmt(rc.AC)
              << ", B_L = " << fmt(rc.BL) << ", B_C = " << fmt(rc.BC) << "\n";

    const DiffusionModel lin2{DiffusionVariant::LinearD2, nr.nd.D1, nr.nd.D2, nr.nd.D3};
    const Interval iv2 = turing_interval(lin2, J, cl);
    std::cout << "turing interval, linear D2: " << interval_str(iv2) << "\n";
    std::cout << "turing interval, linear DP: " << interval_str(rc.linear) << "\n";
    std::cout << "turing interval, cross:     " << interval_str(rc.cross) << "\n";
    std::cout << "case: " << to_string(rc.which) << "\n";
    if (length > 0.0) {
        auto modes = unstable_modes_1d(rc.cross, length, 256);
        std::cout << "unstable cross modes on [0," << fmt(length) << "]:";
        for (int k : modes) std::cout << " " << k;
        std::cout << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- compare-regions

int cmd_compare_regions(const std::string& config_path) {
    const LoadedConfig cfg = load_config(config_path);
    if (cfg.model.xi <= 0.0)
        throw PreconditionError("compare-regions needs the BdA variant (xi > 0)");
    const NondimResult nr = nondimensionalize(cfg.model);
    if (!coexistence_exists(nr.nd))
        throw NoCoexistenceError(nr.nd.Gamma - 2 * nr.nd.mu, 2 * nr.nd.gamma * nr.nd.mu / nr.nd.nu);
    const RegionComparison rc = compare_regions(nr.nd.D1, nr.nd.D2, nr.nd.D3, nr.nd);
    std::cout << "A_L = " << fmt(rc.AL) << "\nA_C = " << fmt(rc.AC) << "\nB_L = " << fmt(rc.BL)
              << "\nB_C = " << fmt(rc.BC) << "\nlinear (D_P) interval: " << interval_str(rc.linear)
              << "\ncross interval:        " << interval_str(rc.cross)
              << "\ncase: " << to_string(rc.which) << "\n";
    if (rc.which == RegionCase::BothWithInclusion)
        std::cout << "cross interval strictly included in linear interval: "
                  << (rc.cross.strictly_inside(rc.linear) ? "yes" : "NO") << "\n";
    return 0;
}

// -------------------------------------------------------------------- scan

void parse_scan_axis(const std::string& flag, std::string& name, double& lo, double& hi, int& n) {
    const auto eq = flag.find('=');
    if (eq == std::string::npos)
        throw ConfigError("scan axis must look like name=lo:hi[:steps], got '" + flag + "'");
    name = flag.substr(0, eq);
    std::string rest = flag.substr(eq + 1);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto colon = rest.find(':', start);
        parts.push_back(rest.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw ConfigError("scan axis must look like name=lo:hi[:steps], got '" + flag + "'");
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    n = parts.size() == 3 ? std::stoi(parts[2]) : 50;
}

int cmd_scan(const GlobalOpts& g, const std::string& config_path, const std::string& p1_flag,
             const std::string& p2_flag, bool log1, bool log2, const std::string& out_dir,
             bool svg) {
    const LoadedConfig cfg = load_config(config_path);
    ScanSpec spec;
    parse_scan_axis(p1_flag, spec.p1, spec.lo1, spec.hi1, spec.n1);
    parse_scan_axis(p2_flag, spec.p2, spec.lo2, spec.hi2, spec.n2);
    spec.log1 = log1;
    spec.log2 = log2;

    const auto cells = parameter_scan(cfg.model, spec, g.threads);

    fs::create_directories(out_dir);
    CsvTable t;
    t.header = {"p1", "p2", "coexists", "J11", "case", "lin_lo", "lin_hi", "cross_lo", "cross_hi"};
    int turing_cells = 0;
    for (const auto& c : cells) {
        const bool lin = !c.linear.empty, crs = !c.cross.empty;
        if (lin || crs) ++turing_cells;
        t.rows.push_back({fmt(c.p1), fmt(c.p2), c.coexists ? "1" : "0",
                          c.coexists ? fmt(c.J11) : "nan",
                          c.error.empty() ? to_string(c.which) : "error",
                          lin ? fmt(c.linear.lo) : "nan", lin ? fmt(c.linear.hi) : "nan",
                          crs ? fmt(c.cross.lo) : "nan", crs ? fmt(c.cross.hi) : "nan"});
    }
    write_file(out_dir + "/scan.csv", to_csv(t));
    if (svg) write_file(out_dir + "/region_map.svg", svg_region_map(cells, spec));

    RunManifest m = make_manifest("scan " + p1_flag + " " + p2_flag, g, cfg);
    write_manifest(out_dir, m);
    std::cout << "scanned " << spec.n1 << "x" << spec.n2 << " cells, " << turing_cells
              << " with a Turing interval -> " << out_dir << "\n";
    return 0;
}

// ----------------------------------------------------------------- converge

int cmd_converge(const GlobalOpts& g, const std::string& config_path, const std::string& system,
                 const std::string& ladder_flag, const std::string& out_dir, double tend,
                 const std::string& init, const std::string& grid_flag,
                 const std::string& length_flag) {
    LoadedConfig cfg = load_config(config_path);
    if (system == "bda") {
        if (cfg.model.xi <= 0.0) throw ConfigError("--system bda requires xi > 0 in [model]");
    } else if (system == "holling") {
        if (cfg.model.xi != 0.0) throw ConfigError("--system holling requires xi = 0 in [model]");
    } else {
        throw ConfigError("--system must be holling or bda");
    }

    SweepConfig sw;
    sw.params = cfg.model;
    sw.grid = grid_from_flags(cfg, grid_flag, length_flag);
    sw.solver = cfg.solver;
    if (tend > 0.0) sw.solver.t_end = tend;
    sw.threads = g.threads;
    if (init == "layer")
        sw.layer_init = true;
    else if (init != "manifold")
        throw ConfigError("--init must be manifold or layer");

    std::istringstream in(ladder_flag);
    std::string tok;
    while (std::getline(in, tok, ',')) sw.ladder.push_back(std::stod(tok));

    default_sweep_profiles(sw.grid, sw.N0, sw.P0);
    const ConvergenceReport rep = epsilon_sweep(sw);

    fs::create_directories(out_dir);
    CsvTable t;
    t.header = {"epsilon", "residual_l2sq", "residual_l1", "dist_l2"};
    for (const auto& p : rep.points)
        t.rows.push_back({fmt(p.epsilon), fmt(p.residual_l2sq), fmt(p.residual_l1),
                          fmt(p.dist_l2)});
    write_file(out_dir + "/convergence.csv", to_csv(t));
    RunManifest m = make_manifest("converge --system " + system, g, cfg);
    m.has_grid = true;
    m.grid = sw.grid;
    m.solver = sw.solver;
    write_manifest(out_dir, m);

    for (const auto& p : rep.points) {
        if (p.ok)
            std::cout << "epsilon = " << fmt(p.epsilon) << ": residual_l2sq = "
                      << fmt(p.residual_l2sq) << ", residual_l1 = " << fmt(p.residual_l1)
                      << ", dist_l2 = " << fmt(p.dist_l2) << "\n";
        else
            std::cout << "epsilon = " << fmt(p.epsilon) << ": FAILED (" << p.error << ")\n";
    }
    if (!rep.complete) {
        std::cout << "sweep incomplete; no slopes fitted\n";
        return kExitNumerical;
    }
    std::cout << "slope log10(residual_l2sq) vs log10(eps): " << fmt(rep.slope_l2sq.slope)
              << " +- " << fmt(rep.slope_l2sq.half_width) << "\n";
    std::cout << "slope log10(residual_l1)   vs log10(eps): " << fmt(rep.slope_l1.slope) << " +- "
              << fmt(rep.slope_l1.half_width) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fast-slow predator-prey reaction-diffusion laboratory"};
    app.set_version_flag("--version", std::string("predprey ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // --seed/--threads may follow the subcommand

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for stochastic initial perturbations");
    app.add_option("--threads", g.threads, "worker-parallelism bound (results are identical)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a PDE simulation");
    std::string sim_system, sim_config, sim_grid, sim_length, sim_out = "out", sim_init = "homogeneous";
    double sim_tend = -1.0, sim_noise = 1e-2, sim_N0 = 1.0, sim_P0 = 0.5;
    int sim_snapshots = 0;
    sim->add_option("--system", sim_system, "micro-holling|micro-bda|limit-holling|limit-bda")
        ->required();
    sim->add_option("--config", sim_config, "model configuration file")->required();
    sim->add_option("--grid", sim_grid, "cells n or n,ny");
    sim->add_option("--length", sim_length, "domain length L or L,Ly");
    sim->add_option("--tend", sim_tend, "final time (overrides [solver] t_end)");
    sim->add_option("--snapshots", sim_snapshots, "snapshot every k-th sample (0 = none)");
    sim->add_option("--out", sim_out, "output directory");
    sim->add_option("--init", sim_init,
                    "homogeneous|homogeneous-layer|estar|estar-noise (layer: p_h = 0)");
    sim->add_option("--noise", sim_noise, "noise amplitude relative to P* for estar-noise");
    sim->add_option("--N0", sim_N0, "homogeneous prey density");
    sim->add_option("--P0", sim_P0, "homogeneous total predator density");

    // equilibrium
    auto* eq = app.add_subcommand("equilibrium", "closed-form equilibria and stability report");
    std::string eq_config;
    eq->add_option("--config", eq_config, "model configuration file")->required();

    // turing
    auto* tu = app.add_subcommand("turing", "dispersion analysis at a single parameter point");
    std::string tu_config;
    double tu_length = 0.0;
    tu->add_option("--config", tu_config, "model configuration file")->required();
    tu->add_option("--length", tu_length, "1D domain length for the unstable-mode listing");

    // compare-regions
    auto* cr = app.add_subcommand("compare-regions",
                                  "linear vs cross Turing-region comparison at one point");
    std::string cr_config;
    cr->add_option("--config", cr_config, "model configuration file")->required();

    // scan
    auto* sc = app.add_subcommand("scan", "classify Turing cases over a 2-parameter grid");
    std::string sc_config, sc_p1, sc_p2, sc_out = "out";
    bool sc_log1 = false, sc_log2 = false, sc_svg = false;
    sc->add_option("--config", sc_config, "model configuration file")->required();
    sc->add_option("--param1", sc_p1, "first axis, name=lo:hi[:steps]")->required();
    sc->add_option("--param2", sc_p2, "second axis, name=lo:hi[:steps]")->required();
    sc->add_flag("--log1", sc_log1, "log-space the first axis");
    sc->add_flag("--log2", sc_log2, "log-space the second axis");
    sc->add_option("--out", sc_out, "output directory");
    sc->add_flag("--svg", sc_svg, "also write region_map.svg");

    // converge
    auto* cv = app.add_subcommand("converge", "epsilon-ladder convergence study");
    std::string cv_config, cv_system, cv_ladder = "1e-2,1e-3,1e-4,1e-5", cv_out = "out",
                cv_init = "manifold", cv_grid, cv_length;
    double cv_tend = 5.0;
    cv->add_option("--config", cv_config, "model configuration file")->required();
    cv->add_option("--system", cv_system, "holling|bda")->required();
    cv->add_option("--ladder", cv_ladder, "comma-separated descending epsilons");
    cv->add_option("--out", cv_out, "output directory");
    cv->add_option("--tend", cv_tend, "time horizon T");
    cv->add_option("--init", cv_init, "manifold|layer predator split of the initial data");
    cv->add_option("--grid", cv_grid, "cells n");
    cv->add_option("--length", cv_length, "domain length L");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(g, sim_config, sim_system, sim_grid, sim_length, sim_tend,
                                sim_snapshots, sim_out, sim_init, sim_noise, sim_N0, sim_P0);
        if (eq->parsed()) return cmd_equilibrium(eq_config);
        if (tu->parsed()) return cmd_turing(tu_config, tu_length);
        if (cr->parsed()) return cmd_compare_regions(cr_config);
        if (sc->parsed())
            return cmd_scan(g, sc_config, sc_p1, sc_p2, sc_log1, sc_log2, sc_out, sc_svg);
        if (cv->parsed())
            return cmd_converge(g, cv_config, cv_system, cv_ladder, cv_out, cv_tend, cv_init,
                                cv_grid, cv_length);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NoCoexistenceError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
