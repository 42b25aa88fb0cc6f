#ifndef PREDPREY_PARAMS_HPP
#define PREDPREY_PARAMS_HPP

#include <optional>
#include <string>

namespace predprey {

// Dimensional parameters of the three-species (prey, searching predators,
// handling predators) reaction-diffusion model.  xi = 0 selects the
// Holling-II variant (no predator interference), xi > 0 the
// Beddington-DeAngelis variant.  All parameters are stored dimensionally;
// nondimensional values are derived views (see nondimensionalize).
struct ModelParams {
    double r0 = 1.0;           // prey growth rate [1/time]
    double eta = 0.0;          // logistic coefficient [1/biomass]; carrying capacity k = 1/eta
    double alpha = 1.0;        // predation encounter rate
    double gamma_tilde = 1.0;  // handling -> searching return rate
    double Gamma = 1.0;        // reproduction rate of handling predators
    double mu = 1.0;           // predator mortality
    double xi = 0.0;           // predator-interference coefficient (>= 0)
    double d1 = 1.0;           // prey diffusion rate
    double d2 = 1.0;           // searching-predator diffusion rate
    double d3 = 1.0;           // handling-predator diffusion rate
    std::optional<double> epsilon;  // time-scale separation; microscopic runs only

    double carrying_capacity() const { return 1.0 / eta; }
    bool holling() const { return xi == 0.0; }
};

// Throws ConfigError naming the offending field.  epsilon, when present,
// must be strictly positive; require_epsilon additionally demands it.
void validate(const ModelParams& p, bool require_epsilon = false);

// Dimensionless parameters of the limit system
//   dN/dT = r (1 - N/nu) N - gamma N P / (B + sqrt(Delta))
//   dP/dT = Gamma N P / (B + sqrt(Delta)) - mu P
// with A = gamma + N - P, B = gamma + N + P, Delta = B^2 - 4 N P.
struct NondimParams {
    double r, nu, gamma, Gamma, mu;
    double D1, D2, D3;
};

void validate(const NondimParams& nd);

// Scaling factors t = Theta T, N = Sigma n, P = Pi p, chosen such that
// 2 alpha Pi Theta = 1, alpha Sigma = 1, gamma_tilde xi Pi = 1.
struct NondimMap {
    double Theta, Sigma, Pi;
};

struct NondimResult {
    NondimParams nd;
    NondimMap map;
};

// Defined only for xi > 0; the Holling variant is analysed in dimensional
// form.  Requires eta > 0 (nu = k / Sigma needs a finite carrying capacity).
NondimResult nondimensionalize(const ModelParams& p);

// Inverse of nondimensionalize for a chosen (Theta, Sigma); the remaining
// scaling factors and rates follow from the defining identities.
ModelParams dimensionalize(const NondimParams& nd, double Theta = 1.0, double Sigma = 1.0);

}  // namespace predprey

#endif
