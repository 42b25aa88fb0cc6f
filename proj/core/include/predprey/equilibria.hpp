#ifndef PREDPREY_EQUILIBRIA_HPP
#define PREDPREY_EQUILIBRIA_HPP

#include <string>
#include <vector>

#include "predprey/params.hpp"

namespace predprey {

enum class EquilibriumKind { Extinction, NonCoexistence, Coexistence };

const char* to_string(EquilibriumKind k);

struct Equilibrium {
    EquilibriumKind kind;
    double N, P;
};

// Closed-form Jacobian of the nondimensional limit reaction at the
// coexistence equilibrium E* = (N*, P*), together with the auxiliary
// quantities used by the Turing analysis:
//   Q*      = gamma + N* + P* - (4 mu / Gamma) P*   ( = sqrt(Delta) at E* )
//   Delta_N = (r - gamma/2)^2 + 4 (r/nu) mu gamma^2 / (Gamma - 2 mu)
// Sign pattern: J12 < 0, J21 > 0, J22 < 0, det > 0; the sign of J11 is not
// prescribed.
struct JacobianStar {
    double N_star, P_star;
    double J11, J12, J21, J22;
    double Q_star, Delta_N;

    double trace() const { return J11 + J22; }
    double det() const { return J11 * J22 - J12 * J21; }
};

// Existence condition of E*: Gamma - 2 mu > 2 gamma mu / nu (strict;
// equality counts as nonexistence).
bool coexistence_exists(const NondimParams& nd);

// N* from the positive root of (r/nu) N^2 - (r - gamma/2) N - mu gamma^2/(Gamma-2mu),
// evaluated in the cancellation-free arrangement and polished by one Newton
// step; P* from P* = (Gamma/2mu) N* - Gamma gamma/(Gamma-2mu).
// Throws NoCoexistenceError when the existence condition fails.
Equilibrium coexistence_equilibrium(const NondimParams& nd);

JacobianStar jacobian_at_estar(const NondimParams& nd);

enum class Stability { StableNode, StableFocus, Saddle, UnstableNode, UnstableFocus };

const char* to_string(Stability s);

struct StabilityReport {
    Equilibrium eq;
    double J11, J12, J21, J22;
    double trace, det;
    Stability classification;
    bool trace_negative;  // consumed by the Turing analysis
};

// Fixed order E0, E1, then E* when it exists.  E0 is always a saddle
// (eigenvalues r, -mu); E1 flips from stable node to saddle exactly at
// Gamma - 2 mu = 2 gamma mu / nu.
std::vector<StabilityReport> classify_equilibria(const NondimParams& nd);

}  // namespace predprey

#endif
