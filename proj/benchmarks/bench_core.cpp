#include <benchmark/benchmark.h>

#include <cmath>

#include "predprey/equilibria.hpp"
#include "predprey/kinetics.hpp"
#include "predprey/solver.hpp"
#include "predprey/turing.hpp"

using namespace predprey;

namespace {

ModelParams bda_params() {
    ModelParams p;
    p.r0 = 0.15;
    p.eta = 1.0 / 85.0;
    p.alpha = 1.0;
    p.gamma_tilde = 0.4;
    p.Gamma = 0.35;
    p.mu = 0.29;
    p.xi = 5.0;
    p.d1 = 0.01;
    p.d2 = 1.0;
    p.d3 = 0.5;
    p.epsilon = 1e-3;
    return p;
}

void BM_SplitPredators(benchmark::State& state) {
    const ModelParams p = bda_params();
    double x = 0.1;
    for (auto _ : state) {
        x = std::fmod(x + 0.37, 8.0);
        benchmark::DoNotOptimize(split_predators_dim(1.0 + x, 2.0, p));
    }
}
BENCHMARK(BM_SplitPredators);

void BM_CrossDiffCoefficient(benchmark::State& state) {
    const ModelParams p = bda_params();
    double x = 0.1;
    for (auto _ : state) {
        x = std::fmod(x + 0.37, 8.0);
        benchmark::DoNotOptimize(cross_diff_coefficient_dim(1.0 + x, 2.0, p));
    }
}
BENCHMARK(BM_CrossDiffCoefficient);

void BM_EquilibriumAndJacobian(benchmark::State& state) {
    const auto nd = nondimensionalize(bda_params()).nd;
    for (auto _ : state) benchmark::DoNotOptimize(jacobian_at_estar(nd));
}
BENCHMARK(BM_EquilibriumAndJacobian);

void BM_CompareRegions(benchmark::State& state) {
    const auto nd = nondimensionalize(bda_params()).nd;
    for (auto _ : state) benchmark::DoNotOptimize(compare_regions(nd.D1, nd.D2, nd.D3, nd));
}
BENCHMARK(BM_CompareRegions);

void BM_LaplacianNeumann(benchmark::State& state) {
    const Grid g = Grid::line(int(state.range(0)), 1.0);
    Field u(g.cells()), out;
    for (int i = 0; i < g.cells(); ++i) u[i] = std::cos(M_PI * g.x(i));
    for (auto _ : state) {
        laplacian_neumann(g, u, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_LaplacianNeumann)->Arg(256)->Arg(4096);

void BM_StepLimit(benchmark::State& state) {
    const ModelParams p = bda_params();
    const Grid g = Grid::line(int(state.range(0)), 20.0);
    SimState s = SimState::homogeneous_limit(g, 6.3, 2.6);
    add_uniform_noise(s.P, 0.02, 99);
    SolverConfig cfg;
    const double dt = stable_dt_limit(s, p, cfg);
    for (auto _ : state) {
        step_limit(s, p, cfg, dt);
        s.t = 0.0;  // keep the run in the same regime
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_StepLimit)->Arg(256)->Arg(1024);

void BM_StepMicro(benchmark::State& state) {
    ModelParams p = bda_params();
    p.epsilon = 1e-4;
    const Grid g = Grid::line(int(state.range(0)), 1.0);
    Field N0(g.cells(), 1.0), P0(g.cells(), 0.5);
    SimState s = micro_from_limit_data(g, N0, P0, p);
    SolverConfig cfg;
    const double dt = std::min(stable_dt_micro(s, p, cfg), 2e-5);
    for (auto _ : state) {
        step_micro(s, p, cfg, dt);
        s.t = 0.0;
    }
    state.SetItemsProcessed(state.iterations() * g.cells());
}
BENCHMARK(BM_StepMicro)->Arg(256)->Arg(1024);

void BM_ParameterScan(benchmark::State& state) {
    const ModelParams base = bda_params();
    ScanSpec spec;
    spec.p1 = "Gamma";
    spec.lo1 = 0.3;
    spec.hi1 = 0.4;
    spec.n1 = 20;
    spec.p2 = "mu";
    spec.lo2 = 0.25;
    spec.hi2 = 0.33;
    spec.n2 = 20;
    for (auto _ : state)
        benchmark::DoNotOptimize(parameter_scan(base, spec, int(state.range(0))));
}
BENCHMARK(BM_ParameterScan)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
