#ifndef PREDPREY_TURING_HPP
#define PREDPREY_TURING_HPP

#include <string>
#include <vector>

#include "predprey/equilibria.hpp"
#include "predprey/params.hpp"

namespace predprey {

// Linear (Turing) instability analysis of the limit system under three
// diffusion models: linear rate D2, linear rate D_P = f(N*,P*), and the
// derived cross diffusion Delta(f(N,P) P).

enum class DiffusionVariant { LinearD2, LinearDP, Cross };

struct DiffusionModel {
    DiffusionVariant variant;
    double D1, D2, D3;
};

// Linearization of the diffusion terms around E*.  With w = D2 p_s + D3 p_h
// (so that Delta(f P) = Delta w):
//   JD21 = dw/dN|_* = -((D2-D3)/Q*) ((Gamma-2mu)/Gamma) P*   < 0 for D2 > D3
//   JD22 = dw/dP|_* = (D2/Q*)(gamma + P*(Gamma-2mu)/Gamma)
//                   + (D3/Q*) 2 mu gamma/(Gamma-2mu)          > 0
// DP = D2 (1 - 2mu/Gamma) + D3 2mu/Gamma is the effective constant rate; a
// convex combination of D2, D3 with DP < JD22 whenever D2 > D3.
struct CrossLinearization {
    double JD21, JD22;
    double DP;
};

double dp_effective(double D2, double D3, const NondimParams& nd);

CrossLinearization cross_linearization(double D1, double D2, double D3, const NondimParams& nd);

// Open interval (lambda-, lambda+) where det M(lambda) < 0; empty when the
// necessary condition fails, the discriminant is nonpositive, or tangency.
struct Interval {
    double lo = 0.0, hi = 0.0;
    bool empty = true;

    bool contains(double x) const { return !empty && lo < x && x < hi; }
    bool strictly_inside(const Interval& outer) const {
        return !empty && !outer.empty && outer.lo < lo && hi < outer.hi;
    }
};

// Dispersion determinant:
//   linear (rate D):  det M = D D1 l^2 - (D1 J22 + D J11) l + det J
//   cross:            det M = D1 JD22 l^2 - (JD22 J11 + D1 J22 - J12 JD21) l + det J
double det_m(double lambda, const DiffusionModel& m, const JacobianStar& J,
             const CrossLinearization& cl);

double tr_m(double lambda, const DiffusionModel& m, const JacobianStar& J,
            const CrossLinearization& cl);

// Largest real part among the eigenvalues of M(lambda); the growth rate of
// the Fourier mode with Laplacian eigenvalue lambda.
double growth_rate(double lambda, const DiffusionModel& m, const JacobianStar& J,
                   const CrossLinearization& cl);

Interval turing_interval(const DiffusionModel& m, const JacobianStar& J,
                         const CrossLinearization& cl);

// Modal eigenvalues lambda_k and dispersion samples for reporting.
struct DispersionCurve {
    std::vector<double> lambdas;
    std::vector<double> trace_vals, det_vals;
    Interval turing;
};

DispersionCurve dispersion_curve(const DiffusionModel& m, const JacobianStar& J,
                                 const CrossLinearization& cl,
                                 const std::vector<double>& lambdas);

// Thresholds of the generic linear-diffusion model M(D):
//   Dhat  = -D1 J22 / J11                        (necessary-condition threshold)
//   Dhat1,2 = (D1/J11^2) [sqrt(det J) -+ sqrt(-J12 J21)]^2
// with Dhat1 < Dhat < Dhat2 whenever J11 > 0, and for D > Dhat2 the real
// roots of det M(D)(l) = 0 sampled as (min, max) branches.  The min branch
// decreases towards 0 and the max branch increases towards J11/D1: the
// instability interval widens with D.
struct BoundaryCurves {
    bool no_region = true;  // J11 <= 0: no Turing instability for any D
    double Dhat = 0, Dhat1 = 0, Dhat2 = 0;
    std::vector<double> D;
    std::vector<double> sol_min, sol_max;
};

BoundaryCurves boundary_curves(const JacobianStar& J, double D1, double D_max,
                               int samples = 64);

enum class RegionCase { NoCoexistence, NoTuringBoth, LinearOnly, BothWithInclusion };

const char* to_string(RegionCase c);

// Coefficients of the two dispersion quadratics det M = A l^2 - B l + det J
// for the LinearDP and Cross models, their intervals, and the case label of
// the three-way classification.  For D2 > D3 and existing E*:
// A_C > A_L, B_L > B_C, and a nonempty cross interval is strictly contained
// in the LinearDP interval.
struct RegionComparison {
    double AL, AC, BL, BC;
    Interval linear, cross;
    RegionCase which;
};

RegionComparison compare_regions(double D1, double D2, double D3, const NondimParams& nd);

// Neumann-Laplacian mode sets of the box domains supported by the solver.
// 1D interval [0,L]: lambda_k = (k pi / L)^2.
double mode_eigenvalue_1d(int k, double L);
// 2D rectangle: lambda_{k,m} = pi^2 (k^2/Lx^2 + m^2/Ly^2).
double mode_eigenvalue_2d(int k, int m, double Lx, double Ly);

// Integer modes k in [1, k_max] with lambda_k inside the interval.
std::vector<int> unstable_modes_1d(const Interval& iv, double L, int k_max);

// Homogeneous coexistence state of the dimensional Holling limit system
// (xi = 0) and the linearizations of reaction and diffusion around it.
// J22 vanishes at E* (prey-dependent functional response), which is what
// forbids Turing patterns for this variant under d3 < d2.
struct HollingPoint {
    bool coexists = false;
    double N = 0, P = 0;
    JacobianStar J{};
    CrossLinearization cl{};  // JD22 = f(N*), JD21 = P* f'(N*), DP = f(N*)
};

HollingPoint holling_point(const ModelParams& p);

// Parameter-space scan.  Two dimensional-parameter names vary over a
// rectangular grid (row-major output, p2 fastest); each cell is analysed
// independently and per-cell failures are recorded in-band.
struct ScanSpec {
    std::string p1, p2;       // field names of ModelParams, e.g. "Gamma", "mu"
    double lo1, hi1, lo2, hi2;
    int n1 = 50, n2 = 50;
    bool log1 = false, log2 = false;
};

struct ScanCell {
    double p1, p2;
    bool coexists = false;
    double J11 = 0;
    RegionCase which = RegionCase::NoCoexistence;
    Interval linear, cross;
    std::string error;  // nonempty when analysis of this cell failed
};

// base.xi > 0: each cell is nondimensionalized and compared via
// compare_regions.  base.xi = 0: the Holling limit system is analysed in
// dimensional form (constant rate f(N*) versus the cross linearization of
// Delta(f(N) P)).
std::vector<ScanCell> parameter_scan(const ModelParams& base, const ScanSpec& spec,
                                     int threads = 1);

}  // namespace predprey

#endif
