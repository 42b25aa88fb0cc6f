#include "predprey/equilibria.hpp"

#include <cmath>

#include "predprey/errors.hpp"
#include "predprey/kinetics.hpp"

namespace predprey {

const char* to_string(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::Extinction: return "extinction";
        case EquilibriumKind::NonCoexistence: return "non-coexistence";
        case EquilibriumKind::Coexistence: return "coexistence";
    }
    return "?";
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::StableNode: return "stable-node";
        case Stability::StableFocus: return "stable-focus";
        case Stability::Saddle: return "saddle";
        case Stability::UnstableNode: return "unstable-node";
        case Stability::UnstableFocus: return "unstable-focus";
    }
    return "?";
}

bool coexistence_exists(const NondimParams& nd) {
    return nd.Gamma - 2.0 * nd.mu > 2.0 * nd.gamma * nd.mu / nd.nu;
}

namespace {

void require_coexistence(const NondimParams& nd) {
    const double lhs = nd.Gamma - 2.0 * nd.mu;
    const double rhs = 2.0 * nd.gamma * nd.mu / nd.nu;
    if (!(lhs > rhs)) throw NoCoexistenceError(lhs, rhs);
}

double delta_n(const NondimParams& nd) {
    const double b = nd.r - nd.gamma / 2.0;
    return b * b + 4.0 * (nd.r / nd.nu) * nd.mu * nd.gamma * nd.gamma / (nd.Gamma - 2.0 * nd.mu);
}

// Positive root of q(N) = (r/nu) N^2 - (r - gamma/2) N - c, c > 0.
double n_star(const NondimParams& nd) {
    const double a = nd.r / nd.nu;
    const double b = nd.r - nd.gamma / 2.0;
    const double c = nd.mu * nd.gamma * nd.gamma / (nd.Gamma - 2.0 * nd.mu);
    const double s = std::sqrt(delta_n(nd));
    // b + s cancels when b < 0 and c is small; switch to the conjugate form.
    double N = (b >= 0.0) ? (b + s) / (2.0 * a) : (2.0 * c) / (s - b);
    // One Newton polish on the quadratic.
    const double q = a * N * N - b * N - c;
    const double dq = 2.0 * a * N - b;
    if (dq != 0.0) N -= q / dq;
    return N;
}

}  // namespace

Equilibrium coexistence_equilibrium(const NondimParams& nd) {
    require_coexistence(nd);
    const double N = n_star(nd);
    const double P = (nd.Gamma / (2.0 * nd.mu)) * N - nd.Gamma * nd.gamma / (nd.Gamma - 2.0 * nd.mu);
    return {EquilibriumKind::Coexistence, N, P};
}

JacobianStar jacobian_at_estar(const NondimParams& nd) {
    require_coexistence(nd);
    const Equilibrium e = coexistence_equilibrium(nd);
    const double g2m = nd.Gamma - 2.0 * nd.mu;
    const double N = e.N, P = e.P;

    JacobianStar J;
    J.N_star = N;
    J.P_star = P;
    J.Delta_N = delta_n(nd);
    J.Q_star = (g2m / (2.0 * nd.mu)) * N + 2.0 * nd.mu * nd.gamma / g2m;
    J.J11 = nd.mu * nd.gamma * nd.gamma * nd.Gamma / (g2m * g2m * N + 4.0 * nd.mu * nd.mu * nd.gamma) -
            std::sqrt(J.Delta_N);
    J.J12 = -nd.gamma * nd.gamma * nd.mu / (J.Q_star * g2m);
    J.J21 = g2m * P / (2.0 * J.Q_star);
    J.J22 = -(nd.mu / (nd.Gamma * J.Q_star)) * g2m * P;
    return J;
}

namespace {

Stability classify(double tr, double det) {
    if (det < 0.0) return Stability::Saddle;
    const double disc = tr * tr - 4.0 * det;
    if (tr < 0.0) return disc >= 0.0 ? Stability::StableNode : Stability::StableFocus;
    return disc >= 0.0 ? Stability::UnstableNode : Stability::UnstableFocus;
}

}  // namespace

std::vector<StabilityReport> classify_equilibria(const NondimParams& nd) {
    validate(nd);
    std::vector<StabilityReport> out;

    // E0 = (0,0): J = diag(r, -mu), a saddle for all parameter values.
    {
        StabilityReport s;
        s.eq = {EquilibriumKind::Extinction, 0.0, 0.0};
        s.J11 = nd.r;
        s.J12 = 0.0;
        s.J21 = 0.0;
        s.J22 = -nd.mu;
        s.trace = s.J11 + s.J22;
        s.det = s.J11 * s.J22;
        s.classification = Stability::Saddle;
        s.trace_negative = s.trace < 0.0;
        out.push_back(s);
    }

    // E1 = (nu,0): lower-triangular with eigenvalues -r and
    // J22(E1) = Gamma nu / (2(gamma+nu)) - mu; positive exactly when E* exists.
    {
        StabilityReport s;
        s.eq = {EquilibriumKind::NonCoexistence, nd.nu, 0.0};
        s.J11 = -nd.r;
        s.J12 = -nd.gamma * nd.nu / (2.0 * (nd.gamma + nd.nu));
        s.J21 = 0.0;
        s.J22 = nd.Gamma * nd.nu / (2.0 * (nd.gamma + nd.nu)) - nd.mu;
        s.trace = s.J11 + s.J22;
        s.det = s.J11 * s.J22;
        s.classification = s.J22 > 0.0 ? Stability::Saddle : Stability::StableNode;
        s.trace_negative = s.trace < 0.0;
        out.push_back(s);
    }

    if (coexistence_exists(nd)) {
        const JacobianStar J = jacobian_at_estar(nd);
        StabilityReport s;
        s.eq = {EquilibriumKind::Coexistence, J.N_star, J.P_star};
        s.J11 = J.J11;
        s.J12 = J.J12;
        s.J21 = J.J21;
        s.J22 = J.J22;
        s.trace = J.trace();
        s.det = J.det();
        s.classification = classify(s.trace, s.det);
        s.trace_negative = s.trace < 0.0;
        out.push_back(s);
    }
    return out;
}

}  // namespace predprey
