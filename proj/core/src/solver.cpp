#include "predprey/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "predprey/errors.hpp"

namespace predprey {

void validate(const SolverConfig& cfg) {
    if (!(cfg.dt_max > 0.0)) throw ConfigError("solver.dt_max must be positive");
    if (!(cfg.cfl_safety > 0.0) || cfg.cfl_safety > 1.0)
        throw ConfigError("solver.cfl_safety must lie in (0, 1]");
    if (!(cfg.t_end >= 0.0)) throw ConfigError("solver.t_end must be nonnegative");
    if (!(cfg.newton_tol > 0.0)) throw ConfigError("solver.newton_tol must be positive");
    if (cfg.newton_max_iters < 1) throw ConfigError("solver.newton_max_iters must be >= 1");
    if (cfg.output_stride < 1) throw ConfigError("solver.output_stride must be >= 1");
    if (cfg.snapshot_stride < 0) throw ConfigError("solver.snapshot_stride must be >= 0");
}

const char* to_string(SystemKind k) {
    switch (k) {
        case SystemKind::MicroHolling: return "micro-holling";
        case SystemKind::MicroBdA: return "micro-bda";
        case SystemKind::LimitHolling: return "limit-holling";
        case SystemKind::LimitBdA: return "limit-bda";
    }
    return "?";
}

SystemKind system_kind_from_string(const std::string& s) {
    if (s == "micro-holling") return SystemKind::MicroHolling;
    if (s == "micro-bda") return SystemKind::MicroBdA;
    if (s == "limit-holling") return SystemKind::LimitHolling;
    if (s == "limit-bda") return SystemKind::LimitBdA;
    throw ConfigError("unknown system '" + s +
                      "' (expected micro-holling|micro-bda|limit-holling|limit-bda)");
}

bool is_micro(SystemKind k) {
    return k == SystemKind::MicroHolling || k == SystemKind::MicroBdA;
}

SimState SimState::homogeneous_micro(const Grid& g, double N0, double ps0, double ph0) {
    SimState s;
    s.grid = g;
    s.micro = true;
    s.N.assign(g.cells(), N0);
    s.ps.assign(g.cells(), ps0);
    s.ph.assign(g.cells(), ph0);
    return s;
}

SimState SimState::homogeneous_limit(const Grid& g, double N0, double P0) {
    SimState s;
    s.grid = g;
    s.micro = false;
    s.N.assign(g.cells(), N0);
    s.P.assign(g.cells(), P0);
    return s;
}

SimState micro_from_limit_data(const Grid& g, const Field& N0, const Field& P0,
                               const ModelParams& p, bool layer) {
    SimState s;
    s.grid = g;
    s.micro = true;
    s.N = N0;
    s.ps.resize(g.cells());
    s.ph.resize(g.cells());
    for (int c = 0; c < g.cells(); ++c) {
        if (layer) {
            s.ps[c] = P0[c];
            s.ph[c] = 0.0;
        } else {
            const PredatorSplit sp = split_predators_dim(N0[c], P0[c], p);
            s.ps[c] = sp.p_s;
            s.ph[c] = sp.p_h;
        }
    }
    return s;
}

void add_uniform_noise(Field& f, double amplitude, std::uint64_t seed) {
    // splitmix64: fully specified, identical on every platform
    std::uint64_t x = seed;
    auto next = [&x]() {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    for (double& v : f) {
        const double u = double(next() >> 11) * 0x1.0p-53;  // [0,1)
        v += amplitude * (2.0 * u - 1.0);
    }
}

namespace {

struct NewtonFailure : NumericalError {
    using NumericalError::NumericalError;
};

void check_nonnegative(const SimState& s, const char* field, const Field& f) {
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (!(f[c] >= 0.0))
            throw NumericalError(std::string("negative density: ") + field + "[" +
                                 std::to_string(c) + "] = " + std::to_string(f[c]) + " at t = " +
                                 std::to_string(s.t));
    }
}

void monitor(const SimState& s) {
    check_nonnegative(s, "N", s.N);
    if (s.micro) {
        check_nonnegative(s, "p_s", s.ps);
        check_nonnegative(s, "p_h", s.ph);
    } else {
        check_nonnegative(s, "P", s.P);
    }
}

double diffusion_dt(const Grid& g, double dmax, double cfl) {
    double rate = dmax / (g.hx * g.hx);
    if (g.dim == 2) rate += dmax / (g.hy * g.hy);
    return cfl / (2.0 * rate);
}

void explicit_diffuse(const Grid& g, Field& u, Field& lap, double d, double dt) {
    laplacian_neumann(g, u, lap);
    for (std::size_t c = 0; c < u.size(); ++c) u[c] += dt * d * lap[c];
}

}  // namespace

double stable_dt_micro(const SimState& s, const ModelParams& p, const SolverConfig& cfg) {
    const double dmax = std::max({p.d1, p.d2, p.d3});
    return diffusion_dt(s.grid, dmax, cfg.cfl_safety);
}

double stable_dt_limit(const SimState& s, const ModelParams& p, const SolverConfig& cfg) {
    // The stiffness of Delta(f P) is set by the linearized diffusivity
    // d(fP)/dP, which exceeds the pointwise f itself for xi P > 0.
    double fmax = p.d1;
    for (int c = 0; c < s.grid.cells(); ++c)
        fmax = std::max(fmax, cross_flux_derivative_dim(s.N[c], s.P[c], p));
    return diffusion_dt(s.grid, fmax, cfg.cfl_safety);
}

void step_micro(SimState& s, const ModelParams& p, const SolverConfig& cfg, double dt) {
    if (!s.micro) throw PreconditionError("step_micro needs a 3-field microscopic state");
    if (!p.epsilon) throw ConfigError("epsilon required for microscopic runs");
    const double eps = *p.epsilon;
    const int n = s.grid.cells();

    static thread_local Field lap;
    explicit_diffuse(s.grid, s.N, lap, p.d1, dt);
    explicit_diffuse(s.grid, s.ps, lap, p.d2, dt);
    explicit_diffuse(s.grid, s.ph, lap, p.d3, dt);

    // Stiffness is cell-local: solve the backward-Euler equations for
    // (p_s, p_h) per cell by damped Newton with N frozen at its post-diffusion
    // value, while N itself advances explicitly.
    for (int c = 0; c < n; ++c) {
        const double N = s.N[c], ps = s.ps[c], ph = s.ph[c];
        const double catch0 = p.alpha * N * ps / (1.0 + p.xi * ps);
        const double Nn = N + dt * (p.r0 * (1.0 - p.eta * N) * N - catch0);

        double x1 = ps, x2 = ph;
        bool converged = false;
        for (int it = 0; it < cfg.newton_max_iters; ++it) {
            const double x1c = std::max(x1, 0.0);  // clamped evaluation inside the iteration
            const double q = 1.0 + p.xi * x1c;
            const double gx = p.alpha * N * x1c / q;
            const double F1 = x1 - ps - dt * ((-gx + p.gamma_tilde * x2) / eps + p.Gamma * x2 -
                                              p.mu * x1);
            const double F2 = x2 - ph - dt * ((gx - p.gamma_tilde * x2) / eps - p.mu * x2);
            const double scale = std::max(1.0, std::abs(x1) + std::abs(x2));
            if (std::abs(F1) + std::abs(F2) < cfg.newton_tol * scale) {
                converged = true;
                break;
            }
            const double gp = p.alpha * N / (q * q);
            const double a11 = 1.0 + dt * (gp / eps + p.mu);
            const double a12 = -dt * (p.gamma_tilde / eps + p.Gamma);
            const double a21 = -dt * gp / eps;
            const double a22 = 1.0 + dt * (p.gamma_tilde / eps + p.mu);
            const double det = a11 * a22 - a12 * a21;
            if (det == 0.0) break;
            double dx1 = (F1 * a22 - F2 * a12) / det;
            double dx2 = (a11 * F2 - a21 * F1) / det;
            // damp steps that would overshoot far into the negative range
            for (int damp = 0; damp < 20 && (x1 - dx1 < -0.5 * std::abs(x1) - 1e-12 ||
                                             x2 - dx2 < -0.5 * std::abs(x2) - 1e-12);
                 ++damp) {
                dx1 *= 0.5;
                dx2 *= 0.5;
            }
            x1 -= dx1;
            x2 -= dx2;
        }
        if (!converged)
            throw NewtonFailure("stiff exchange Newton did not converge in " +
                                std::to_string(cfg.newton_max_iters) + " iterations at cell " +
                                std::to_string(c) + ", t = " + std::to_string(s.t));
        s.N[c] = Nn;
        s.ps[c] = x1;
        s.ph[c] = x2;
    }
    s.t += dt;
    monitor(s);
}

void step_limit(SimState& s, const ModelParams& p, const SolverConfig& cfg, double dt) {
    (void)cfg;
    if (s.micro) throw PreconditionError("step_limit needs a 2-field limit state");
    const int n = s.grid.cells();

    // Cross diffusion discretised as Delta applied to w = f(N,P) P, matching
    // the divergence form of the limit equation (not nabla.(f nabla P)).
    static thread_local Field w, lapw, lapN;
    w.resize(n);
    for (int c = 0; c < n; ++c) w[c] = cross_diff_coefficient_dim(s.N[c], s.P[c], p) * s.P[c];
    laplacian_neumann(s.grid, w, lapw);
    laplacian_neumann(s.grid, s.N, lapN);

    for (int c = 0; c < n; ++c) {
        const LimitRates r = reaction_limit_dim(s.N[c], s.P[c], p);
        s.N[c] += dt * (p.d1 * lapN[c] + r.dN);
        s.P[c] += dt * (lapw[c] + r.dP);
    }
    s.t += dt;
    monitor(s);
}

TimeSeries simulate(SimState state, const ModelParams& p, const SolverConfig& cfg) {
    validate(cfg);
    validate(p, state.micro);
    monitor(state);

    TimeSeries ts;
    ts.field_names = state.micro ? std::vector<std::string>{"N", "p_s", "p_h"}
                                 : std::vector<std::string>{"N", "P"};
    auto fields_of = [&](const SimState& s) {
        return s.micro ? std::vector<const Field*>{&s.N, &s.ps, &s.ph}
                       : std::vector<const Field*>{&s.N, &s.P};
    };
    auto sample = [&](const SimState& s) {
        ts.times.push_back(s.t);
        std::vector<std::array<double, 3>> row;
        for (const Field* f : fields_of(s))
            row.push_back({norm_l1(s.grid, *f), norm_l2(s.grid, *f), norm_linf(s.grid, *f)});
        ts.norms.push_back(std::move(row));
        if (cfg.snapshot_stride > 0 &&
            (ts.times.size() - 1) % std::size_t(cfg.snapshot_stride) == 0) {
            Snapshot sn;
            sn.sample_index = int(ts.times.size()) - 1;
            sn.t = s.t;
            for (const Field* f : fields_of(s)) sn.fields.push_back(*f);
            ts.snapshots.push_back(std::move(sn));
        }
    };

    sample(state);
    long step = 0;
    while (state.t < cfg.t_end) {
        const double stable = state.micro ? stable_dt_micro(state, p, cfg)
                                          : stable_dt_limit(state, p, cfg);
        double dt = std::min({cfg.dt_max, stable, cfg.t_end - state.t});
        if (state.micro) {
            const double floor = dt / double(1 << 20);
            SimState saved = state;
            for (;;) {
                try {
                    step_micro(state, p, cfg, dt);
                    break;
                } catch (const NewtonFailure&) {
                    dt *= 0.5;
                    if (dt < floor) throw;
                    state = saved;  // reject the step, retry with halved dt
                }
            }
        } else {
            step_limit(state, p, cfg, dt);
        }
        ++step;
        if (step % cfg.output_stride == 0 || state.t >= cfg.t_end) sample(state);
    }
    return ts;
}

ResidualNorms residual_constraint(const SimState& s, const ModelParams& p) {
    if (!s.micro)
        throw PreconditionError("residual_constraint is defined for microscopic states only");
    Field r(s.grid.cells());
    for (int c = 0; c < s.grid.cells(); ++c)
        r[c] = exchange_residual(s.N[c], s.ps[c], s.ph[c], p);
    return {norm_l1(s.grid, r), norm_l2(s.grid, r)};
}

}  // namespace predprey
