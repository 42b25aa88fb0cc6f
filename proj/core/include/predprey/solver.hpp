#ifndef PREDPREY_SOLVER_HPP
#define PREDPREY_SOLVER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "predprey/grid.hpp"
#include "predprey/kinetics.hpp"
#include "predprey/params.hpp"

namespace predprey {

struct SolverConfig {
    double dt_max = 1e9;
    double cfl_safety = 0.9;       // in (0, 1]
    double t_end = 10.0;
    double newton_tol = 1e-12;
    int newton_max_iters = 30;
    int output_stride = 10;        // sample every this many steps
    int snapshot_stride = 0;       // 0 = no snapshots; otherwise every this many samples
};

void validate(const SolverConfig& cfg);

enum class SystemKind { MicroHolling, MicroBdA, LimitHolling, LimitBdA };

const char* to_string(SystemKind k);
SystemKind system_kind_from_string(const std::string& s);
bool is_micro(SystemKind k);

// Discretized fields.  Microscopic runs carry (N, p_s, p_h); limit runs
// carry (N, P).  Nonnegativity is a monitored invariant: a violation aborts
// the run with a NumericalError, it is never clamped away.
struct SimState {
    double t = 0.0;
    Grid grid;
    bool micro = false;
    Field N, ps, ph;  // ps/ph empty for limit states
    Field P;          // empty for microscopic states

    static SimState homogeneous_micro(const Grid& g, double N0, double ps0, double ph0);
    static SimState homogeneous_limit(const Grid& g, double N0, double P0);
};

// Splits P0 on the constraint manifold (or puts all predators in the
// searching class when layer == true, exhibiting the initial layer).
SimState micro_from_limit_data(const Grid& g, const Field& N0, const Field& P0,
                               const ModelParams& p, bool layer = false);

// Adds centered uniform noise of the given amplitude to every cell of the
// field, deterministically from the seed.
void add_uniform_noise(Field& f, double amplitude, std::uint64_t seed);

struct Snapshot {
    int sample_index;
    double t;
    std::vector<Field> fields;  // same order as TimeSeries::field_names
};

struct TimeSeries {
    std::vector<std::string> field_names;
    std::vector<double> times;
    // norms[sample][field] = {L1, L2, Linf}
    std::vector<std::vector<std::array<double, 3>>> norms;
    std::vector<Snapshot> snapshots;
};

// Largest stable explicit step for the state: diffusion-limited,
// dt <= cfl_safety / (2 sum_dims d_max/h^2), with d_max = max(d1,d2,d3)
// (micro) or max(d1, max-pointwise d(fP)/dP) (limit; the linearized
// diffusivity of the cross term, which exceeds f itself when xi P > 0).
double stable_dt_micro(const SimState& s, const ModelParams& p, const SolverConfig& cfg);
double stable_dt_limit(const SimState& s, const ModelParams& p, const SolverConfig& cfg);

// One operator-splitting step of the microscopic system: explicit diffusion
// of all three fields, then a per-cell solve of the stiff exchange + slow
// reaction (N explicit within the substep, (p_s,p_h) by damped 2x2 Newton on
// the backward-Euler equations).  Throws NumericalError on Newton
// nonconvergence; the caller owns the retry/halving policy.
void step_micro(SimState& s, const ModelParams& p, const SolverConfig& cfg, double dt);

// One explicit step of the limit system: w = f(N,P) P pointwise, Delta w by
// the Neumann Laplacian, reaction added pointwise.
void step_limit(SimState& s, const ModelParams& p, const SolverConfig& cfg, double dt);

// Advances to cfg.t_end with norm sampling every cfg.output_stride steps
// (first and last step always sampled).  Deterministic: identical output
// across runs and thread counts.  Rejected microscopic steps are retried
// with halved dt down to a floor of dt/2^20.
TimeSeries simulate(SimState state, const ModelParams& p, const SolverConfig& cfg);

struct ResidualNorms {
    double l1, l2;
};

// Spatial norms of the exchange residual gt ph - a N ps/(1 + xi ps).
// Microscopic states only.
ResidualNorms residual_constraint(const SimState& s, const ModelParams& p);

}  // namespace predprey

#endif
