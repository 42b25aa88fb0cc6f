#ifndef PREDPREY_TEST_FIXTURES_HPP
#define PREDPREY_TEST_FIXTURES_HPP

// Shared parameter fixtures and frozen oracle values.  The frozen constants
// were produced by an independent 40-digit evaluation of the closed forms
// and cross-checked in-test by the bisection/finite-difference oracles.

#include "predprey/params.hpp"

namespace fixtures {

// Reference set: coexistence with J11 < 0 (no Turing instability for any
// diffusion rates).
inline predprey::NondimParams ref() {
    return {1.0, 1.0, 1.0, 5.0, 1.0, 0.01, 1.0, 0.1};
}

namespace ref_vals {
inline constexpr double N_star = 0.87915286960589581;
inline constexpr double P_star = 0.53121550734807285;
inline constexpr double Q_star = 1.9853959710755104;
inline constexpr double Delta_N = 1.5833333333333333;
inline constexpr double J11 = -0.83857418667826467;
inline constexpr double J12 = -0.16789262101341078;
inline constexpr double J21 = 0.40134223733236526;
inline constexpr double J22 = -0.16053689493294610;
inline constexpr double det = 0.20200449624936647;
inline constexpr double trace = -0.99911108161121077;
// cross linearization at D1 = 0.01, D2 = 1, D3 = 0.1
inline constexpr double JD21 = -0.14448320543965149;
inline constexpr double JD22 = 0.69779328217586060;
inline constexpr double DP = 0.64;
}  // namespace ref_vals

// Turing-capable set: J11 > 0 with trace < 0.  With D1 = 0.01, D3 = D2/2:
// D2 = 0.10 -> NoTuringBoth, 0.15 -> LinearOnly, 1.0 -> BothWithInclusion.
inline predprey::NondimParams ndplus(double D2 = 1.0) {
    return {0.15, 85.0, 0.4, 0.7, 0.29, 0.01, D2, D2 / 2.0};
}

namespace ndplus_vals {
inline constexpr double N_star = 6.3224903573681571;
inline constexpr double P_star = 5.2972584772834080;
inline constexpr double Q_star = 3.2414347865819176;
inline constexpr double Delta_N = 0.0052294117647058824;
inline constexpr double J11 = 0.071654495322501866;
inline constexpr double J12 = -0.11928873851397313;
inline constexpr double J21 = 0.098053957448936059;
inline constexpr double J22 = -0.081244707600547020;
inline constexpr double det = 0.0058751843696449532;
inline constexpr double trace = -0.0095902122780451544;
inline constexpr double Dhat = 0.011338396458572713;
inline constexpr double Dhat1 = 0.0019327721123841719;
inline constexpr double Dhat2 = 0.066515464201928052;
inline constexpr double sol_at_Dhat2 = 2.9720043225760275;
// D2 = 1.0, D3 = 0.5
inline constexpr double JD21 = -0.14007708206990866;
inline constexpr double JD22 = 0.70177815371506717;
inline constexpr double DP = 0.58571428571428571;
inline constexpr double lin_lo = 0.14577614666276907;
inline constexpr double lin_hi = 6.8809629091962397;
inline constexpr double cross_lo = 0.18679481961679826;
inline constexpr double cross_hi = 4.4818449447480533;
// D2 = 0.15, D3 = 0.075 (LinearOnly)
inline constexpr double lin15_lo = 1.3740967836015658;
inline constexpr double lin15_hi = 4.8666162393741018;
}  // namespace ndplus_vals

// Dimensional counterpart of ref() under Theta = 1, Sigma = 1.
inline predprey::ModelParams ref_dim() {
    predprey::ModelParams p;
    p.r0 = 1.0;
    p.eta = 1.0;
    p.alpha = 1.0;
    p.gamma_tilde = 1.0;
    p.Gamma = 2.5;
    p.mu = 1.0;
    p.xi = 2.0;
    p.d1 = 0.01;
    p.d2 = 1.0;
    p.d3 = 0.1;
    return p;
}

// Dimensional counterpart of ndplus(D2) under Theta = 1, Sigma = 1.
inline predprey::ModelParams ndplus_dim(double D2 = 1.0) {
    predprey::ModelParams p;
    p.r0 = 0.15;
    p.eta = 1.0 / 85.0;
    p.alpha = 1.0;
    p.gamma_tilde = 0.4;
    p.Gamma = 0.35;
    p.mu = 0.29;
    p.xi = 5.0;
    p.d1 = 0.01;
    p.d2 = D2;
    p.d3 = D2 / 2.0;
    return p;
}

// Holling set with exact rational equilibrium: N* = 1/3, P* = 8/9,
// J = [-1/6, -1/4; 2, 0], f(N*) = 0.04, P* f'(N*) = -0.02.
inline predprey::ModelParams holling_clean() {
    predprey::ModelParams p;
    p.r0 = 1.0;
    p.eta = 1.0;
    p.alpha = 1.0;
    p.gamma_tilde = 1.0;
    p.Gamma = 4.0;
    p.mu = 1.0;
    p.xi = 0.0;
    p.d1 = 0.01;
    p.d2 = 0.05;
    p.d3 = 0.01;
    return p;
}

}  // namespace fixtures

#endif
