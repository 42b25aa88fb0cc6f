#include "predprey/params.hpp"

#include <cmath>
#include <string>

#include "predprey/errors.hpp"

namespace predprey {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ConfigError(std::string("parameter '") + name + "' must be strictly positive, got " +
                          std::to_string(v));
}

void require_nonnegative(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw ConfigError(std::string("parameter '") + name + "' must be nonnegative, got " +
                          std::to_string(v));
}

}  // namespace

void validate(const ModelParams& p, bool require_epsilon) {
    require_positive(p.r0, "r0");
    require_nonnegative(p.eta, "eta");
    require_positive(p.alpha, "alpha");
    require_positive(p.gamma_tilde, "gamma_tilde");
    require_positive(p.Gamma, "Gamma");
    require_positive(p.mu, "mu");
    require_nonnegative(p.xi, "xi");
    require_positive(p.d1, "d1");
    require_positive(p.d2, "d2");
    require_positive(p.d3, "d3");
    if (p.epsilon) require_positive(*p.epsilon, "epsilon");
    if (require_epsilon && !p.epsilon)
        throw ConfigError("epsilon required for microscopic runs");
}

void validate(const NondimParams& nd) {
    require_positive(nd.r, "r");
    require_positive(nd.nu, "nu");
    require_positive(nd.gamma, "gamma");
    require_positive(nd.Gamma, "Gamma");
    require_positive(nd.mu, "mu");
    require_positive(nd.D1, "D1");
    require_positive(nd.D2, "D2");
    require_positive(nd.D3, "D3");
}

NondimResult nondimensionalize(const ModelParams& p) {
    if (p.xi <= 0.0)
        throw PreconditionError(
            "Holling variant is already in reduced form; adimensionalization map undefined "
            "(xi = 0)");
    if (p.eta <= 0.0)
        throw PreconditionError("adimensionalization requires eta > 0 (finite carrying capacity)");
    validate(p);

    // 2 alpha Pi Theta = 1, alpha Sigma = 1, gamma_tilde xi Pi = 1.
    NondimMap map;
    map.Sigma = 1.0 / p.alpha;
    map.Pi = 1.0 / (p.gamma_tilde * p.xi);
    map.Theta = 1.0 / (2.0 * p.alpha * map.Pi);

    NondimParams nd;
    nd.r = p.r0 * map.Theta;
    nd.nu = p.carrying_capacity() / map.Sigma;
    nd.gamma = p.gamma_tilde;
    nd.Gamma = p.Gamma * p.gamma_tilde * map.Sigma * p.xi;
    nd.mu = p.mu * map.Theta;
    nd.D1 = p.d1 * map.Theta;
    nd.D2 = p.d2 * map.Theta;
    nd.D3 = p.d3 * map.Theta;
    return {nd, map};
}

ModelParams dimensionalize(const NondimParams& nd, double Theta, double Sigma) {
    validate(nd);
    if (!(Theta > 0.0) || !(Sigma > 0.0))
        throw PreconditionError("dimensionalize requires Theta > 0 and Sigma > 0");

    const double Pi = Sigma / (2.0 * Theta);  // from 2 alpha Pi Theta = 1, alpha Sigma = 1
    ModelParams p;
    p.alpha = 1.0 / Sigma;
    p.gamma_tilde = nd.gamma;
    p.xi = 1.0 / (p.gamma_tilde * Pi);
    p.r0 = nd.r / Theta;
    p.eta = 1.0 / (nd.nu * Sigma);
    p.Gamma = nd.Gamma / (p.gamma_tilde * Sigma * p.xi);
    p.mu = nd.mu / Theta;
    p.d1 = nd.D1 / Theta;
    p.d2 = nd.D2 / Theta;
    p.d3 = nd.D3 / Theta;
    return p;
}

}  // namespace predprey
