#ifndef PREDPREY_KINETICS_HPP
#define PREDPREY_KINETICS_HPP

#include "predprey/params.hpp"

namespace predprey {

// Pointwise algebra of the model: functional responses, the algebraic
// predator split enforced by the fast exchange, the nonlinear
// cross-diffusion coefficient, and the reaction right-hand sides of every
// system variant.  All functions are pure; negative densities are rejected
// (a negative value reaching these functions signals a solver bug upstream
// and must not be masked).

// A = gamma + N - P, B = gamma + N + P, Delta = B^2 - 4NP in nondimensional
// variables.  Delta is evaluated as A^2 + 4 gamma P: a sum of nonnegative
// terms, so Delta >= 0 holds in floating point as well.
struct AuxQuantities {
    double A, B, Delta;
};

AuxQuantities aux_quantities(double N, double P, double gamma);

// Dimensional counterpart: A = gt + a N - gt xi P, Delta = A^2 + 4 gt^2 xi P.
AuxQuantities aux_quantities_dim(double N, double P, const ModelParams& p);

struct PredatorSplit {
    double p_s, p_h;
};

// Positive root of p_s^2 + (gamma + N - P) p_s - gamma P = 0 and its
// complement: p_s = 2 gamma P / (A + sqrt(Delta)), p_h = 2 N P / (B + sqrt(Delta)).
PredatorSplit split_predators(double N, double P, const NondimParams& nd);

// Dimensional split; reduces to p_s = gt P/(a N + gt), p_h = a N P/(a N + gt)
// when xi = 0.
PredatorSplit split_predators_dim(double N, double P, const ModelParams& p);

// Trophic rate gamma N P / (B + sqrt(Delta)).  Algebraically equal to
// (gamma/4)(B - sqrt(B^2 - 4NP)); the quotient form is used everywhere since
// the direct difference cancels catastrophically as NP -> 0.
double trophic_bda(double N, double P, const NondimParams& nd);

// Effective predator diffusivity f(N,P) = D2 2gamma/(A+sqrt(Delta))
//                                       + D3 2N/(B+sqrt(Delta)).
// The two weights are p_s/P and p_h/P, hence nonnegative with sum 1: f is a
// pointwise convex combination of D2 and D3, equal to D2 at N = 0.
double cross_diff_coefficient(double N, double P, const NondimParams& nd);

// Dimensional form; xi = 0 reduces exactly to holling_limit_coefficient.
double cross_diff_coefficient_dim(double N, double P, const ModelParams& p);

// Holling-II limit coefficient (d2 gt + d3 a N)/(a N + gt).
double holling_limit_coefficient(double N, const ModelParams& p);

// d(f(N,P) P)/dP = d2 dps/dP + d3 dph/dP with dps/dP = gt(1+xi ps)/sqrt(Delta):
// again a convex combination of d2 and d3, but distinct from f itself.  This
// is the diffusivity the explicit stability bound of the limit stepper must
// respect; it exceeds f wherever xi P is appreciable.
double cross_flux_derivative_dim(double N, double P, const ModelParams& p);

struct MicroRates {
    double dN, dps, dph;
};

// Reaction right-hand side of the microscopic 3-field system, including the
// 1/epsilon exchange term +-(-a N ps/(1+xi ps) + gt ph)/epsilon.
MicroRates reaction_micro(double N, double ps, double ph, const ModelParams& p);

// Same rates with inputs clamped to max(x, 0).  For use inside implicit
// solver iterations only, where Newton iterates may transiently leave the
// domain; never a substitute for the monitored nonnegativity of states.
MicroRates reaction_micro_clamped(double N, double ps, double ph, const ModelParams& p);

struct LimitRates {
    double dN, dP;
};

// Nondimensional limit reaction (the system analysed for equilibria and
// Turing instability).
LimitRates reaction_limit(double N, double P, const NondimParams& nd);

// Dimensional limit reaction, valid for both variants:
//   dN = r0 (1 - eta N) N - 2 a gt N P / (B + sqrt(Delta))
//   dP = 2 a Gamma N P / (B + sqrt(Delta)) - mu P
// At xi = 0 the trophic term reduces to a gt N P / (a N + gt).
LimitRates reaction_limit_dim(double N, double P, const ModelParams& p);

// Exchange residual gt ph - a N ps / (1 + xi ps); identically zero on the
// constraint manifold.
double exchange_residual(double N, double ps, double ph, const ModelParams& p);

}  // namespace predprey

#endif
