#ifndef PREDPREY_CONVERGENCE_HPP
#define PREDPREY_CONVERGENCE_HPP

#include <span>
#include <string>
#include <vector>

#include "predprey/params.hpp"
#include "predprey/solver.hpp"

namespace predprey {

// epsilon -> 0 experimental harness: runs the microscopic system across a
// descending epsilon ladder with shared initial data, accumulates the
// time-integrated exchange-residual norms at every step, and measures the
// L2([0,T]xOmega) distance to the limit-system solution on a shared output
// sampling.

struct SweepConfig {
    ModelParams params;            // epsilon ignored; set per ladder member
    Grid grid;
    SolverConfig solver;
    std::vector<double> ladder;    // strictly decreasing epsilons
    bool layer_init = false;       // true: p_h = 0 initially (off-manifold)
    int threads = 1;
    // Initial profiles N0(x), P0(x); defaults (set by default_sweep_profiles)
    // are smooth with inf N0 > 0.
    Field N0, P0;
};

void default_sweep_profiles(const Grid& g, Field& N0, Field& P0);

struct LadderPoint {
    double epsilon;
    double residual_l2sq;   // int_0^T ||gt ph - aNps/(1+xi ps)||_L2^2 dt
    double residual_l1;     // int_0^T ||  ..  ||_L1 dt
    double dist_l2;         // || (N^eps - N, ps+ph - P) ||_L2([0,T]xOmega)
    bool ok = false;
    std::string error;
};

struct RateFit {
    double slope;
    double half_width;  // 2 x standard error of the slope
};

// Ordinary least squares on log10 values; requires >= 3 strictly positive
// points with nondegenerate spread.
RateFit rate_fit(std::span<const double> xs, std::span<const double> ys);

struct ConvergenceReport {
    std::vector<LadderPoint> points;  // ladder order
    RateFit slope_l2sq{0, 0};
    RateFit slope_l1{0, 0};
    bool complete = false;            // false when a member run failed
};

ConvergenceReport epsilon_sweep(const SweepConfig& cfg);

}  // namespace predprey

#endif
