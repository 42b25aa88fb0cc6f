#include "predprey/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "predprey/errors.hpp"

namespace predprey {

namespace {

void require_density(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw NumericalError(std::string("negative or non-finite density: ") + name + " = " +
                             std::to_string(v));
}

}  // namespace

AuxQuantities aux_quantities(double N, double P, double gamma) {
    const double A = gamma + N - P;
    const double B = gamma + N + P;
    // Delta = B^2 - 4NP = A^2 + 4 gamma P; the latter cannot go negative.
    const double Delta = A * A + 4.0 * gamma * P;
    return {A, B, Delta};
}

AuxQuantities aux_quantities_dim(double N, double P, const ModelParams& p) {
    const double gxP = p.gamma_tilde * p.xi * P;
    const double A = p.gamma_tilde + p.alpha * N - gxP;
    const double B = p.gamma_tilde + p.alpha * N + gxP;
    const double Delta = A * A + 4.0 * p.gamma_tilde * gxP;
    return {A, B, Delta};
}

PredatorSplit split_predators(double N, double P, const NondimParams& nd) {
    require_density(N, "N");
    require_density(P, "P");
    const auto [A, B, Delta] = aux_quantities(N, P, nd.gamma);
    const double s = std::sqrt(Delta);
    // A + s >= 2 gamma > 0 at P = 0 and exceeds |A| otherwise.
    return {2.0 * nd.gamma * P / (A + s), 2.0 * N * P / (B + s)};
}

PredatorSplit split_predators_dim(double N, double P, const ModelParams& p) {
    require_density(N, "N");
    require_density(P, "P");
    const auto [A, B, Delta] = aux_quantities_dim(N, P, p);
    const double s = std::sqrt(Delta);
    return {2.0 * p.gamma_tilde * P / (A + s), 2.0 * p.alpha * N * P / (B + s)};
}

double trophic_bda(double N, double P, const NondimParams& nd) {
    require_density(N, "N");
    require_density(P, "P");
    const auto [A, B, Delta] = aux_quantities(N, P, nd.gamma);
    (void)A;
    return nd.gamma * N * P / (B + std::sqrt(Delta));
}

double cross_diff_coefficient(double N, double P, const NondimParams& nd) {
    require_density(N, "N");
    require_density(P, "P");
    if (N == 0.0) return nd.D2;  // weight of D2 is exactly 1 without prey
    const auto [A, B, Delta] = aux_quantities(N, P, nd.gamma);
    const double s = std::sqrt(Delta);
    return nd.D2 * 2.0 * nd.gamma / (A + s) + nd.D3 * 2.0 * N / (B + s);
}

double cross_diff_coefficient_dim(double N, double P, const ModelParams& p) {
    if (N == 0.0) return p.d2;
    const auto [A, B, Delta] = aux_quantities_dim(N, P, p);
    const double s = std::sqrt(Delta);
    return p.d2 * 2.0 * p.gamma_tilde / (A + s) + p.d3 * 2.0 * p.alpha * N / (B + s);
}

double holling_limit_coefficient(double N, const ModelParams& p) {
    return (p.d2 * p.gamma_tilde + p.d3 * p.alpha * N) / (p.alpha * N + p.gamma_tilde);
}

double cross_flux_derivative_dim(double N, double P, const ModelParams& p) {
    const auto [A, B, Delta] = aux_quantities_dim(N, P, p);
    (void)B;
    const double s = std::sqrt(Delta);
    // ps solves gt xi ps^2 + A ps - gt P = 0, so 2 gt xi ps + A = sqrt(Delta)
    const double ps = 2.0 * p.gamma_tilde * P / (A + s);
    const double dps = p.gamma_tilde * (1.0 + p.xi * ps) / s;
    return p.d2 * dps + p.d3 * (1.0 - dps);
}

namespace {

MicroRates micro_rates_unchecked(double N, double ps, double ph, const ModelParams& p,
                                 double eps) {
    const double catch_rate = p.alpha * N * ps / (1.0 + p.xi * ps);
    const double exchange = (-catch_rate + p.gamma_tilde * ph) / eps;
    MicroRates r;
    r.dN = p.r0 * (1.0 - p.eta * N) * N - catch_rate;
    r.dps = exchange + p.Gamma * ph - p.mu * ps;
    r.dph = -exchange - p.mu * ph;
    return r;
}

}  // namespace

MicroRates reaction_micro(double N, double ps, double ph, const ModelParams& p) {
    require_density(N, "N");
    require_density(ps, "p_s");
    require_density(ph, "p_h");
    if (!p.epsilon || *p.epsilon <= 0.0)
        throw PreconditionError("reaction_micro requires epsilon > 0");
    return micro_rates_unchecked(N, ps, ph, p, *p.epsilon);
}

MicroRates reaction_micro_clamped(double N, double ps, double ph, const ModelParams& p) {
    if (!p.epsilon || *p.epsilon <= 0.0)
        throw PreconditionError("reaction_micro requires epsilon > 0");
    return micro_rates_unchecked(std::max(N, 0.0), std::max(ps, 0.0), std::max(ph, 0.0), p,
                                 *p.epsilon);
}

LimitRates reaction_limit(double N, double P, const NondimParams& nd) {
    require_density(N, "N");
    require_density(P, "P");
    const double trophic = trophic_bda(N, P, nd);
    return {nd.r * (1.0 - N / nd.nu) * N - trophic, (nd.Gamma / nd.gamma) * trophic - nd.mu * P};
}

LimitRates reaction_limit_dim(double N, double P, const ModelParams& p) {
    require_density(N, "N");
    require_density(P, "P");
    const auto [A, B, Delta] = aux_quantities_dim(N, P, p);
    (void)A;
    const double gain = 2.0 * p.alpha * N * P / (B + std::sqrt(Delta));
    return {p.r0 * (1.0 - p.eta * N) * N - p.gamma_tilde * gain, p.Gamma * gain - p.mu * P};
}

double exchange_residual(double N, double ps, double ph, const ModelParams& p) {
    return p.gamma_tilde * ph - p.alpha * N * ps / (1.0 + p.xi * ps);
}

}  // namespace predprey
