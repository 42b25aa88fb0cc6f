#include "predprey/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "predprey/errors.hpp"

namespace predprey {

void default_sweep_profiles(const Grid& g, Field& N0, Field& P0) {
    // Smooth Neumann-compatible profiles with inf N0 > 0.
    N0.resize(g.cells());
    P0.resize(g.cells());
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const int c = g.index(i, j);
            double m = std::cos(M_PI * g.x(i) / g.lx);
            double m2 = std::cos(2.0 * M_PI * g.x(i) / g.lx);
            if (g.dim == 2) {
                m *= std::cos(M_PI * g.y(j) / g.ly);
                m2 *= std::cos(2.0 * M_PI * g.y(j) / g.ly);
            }
            N0[c] = 1.0 + 0.2 * m;
            P0[c] = 0.5 + 0.1 * m2;
        }
    }
}

RateFit rate_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 3)
        throw PreconditionError("rate_fit needs at least 3 matching points");
    const std::size_t n = xs.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw PreconditionError("rate_fit needs strictly positive values");
        lx[i] = std::log10(xs[i]);
        ly[i] = std::log10(ys[i]);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx <= 0.0) throw PreconditionError("rate_fit: degenerate abscissa spread");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ly[i] - (intercept + slope * lx[i]);
        ss += e * e;
    }
    const double se = n > 2 ? std::sqrt(ss / double(n - 2) / sxx) : 0.0;
    return {slope, 2.0 * se};
}

namespace {

// Runs one microscopic ladder member and accumulates the residual-norm time
// integrals at every step (trapezoid in t); the limit-field distance is
// sampled on the shared output grid of `sample_times`.
struct MemberResult {
    double residual_l2sq = 0, residual_l1 = 0;
    std::vector<Field> N_at, P_at;  // fields at the shared sample times
};

MemberResult run_member(const SweepConfig& cfg, double eps,
                        const std::vector<double>& sample_times) {
    ModelParams p = cfg.params;
    p.epsilon = eps;
    validate(p, true);

    SimState s = micro_from_limit_data(cfg.grid, cfg.N0, cfg.P0, p, cfg.layer_init);

    // dt must resolve the exchange relaxation (time scale eps) or the layer
    // contribution to the residual integrals degrades; eps/5 keeps the
    // discretisation bias a fixed multiple across ladder members.
    SolverConfig sc = cfg.solver;
    const double T = sc.t_end;
    double dt = std::min({sc.dt_max, stable_dt_micro(s, p, sc), eps / 5.0});
    const long nsteps = long(std::ceil(T / dt));
    dt = T / double(nsteps);

    MemberResult out;
    ResidualNorms r_old = residual_constraint(s, p);
    std::size_t next_sample = 0;
    auto take_samples = [&](const SimState& st) {
        while (next_sample < sample_times.size() &&
               st.t >= sample_times[next_sample] - 0.5 * dt) {
            out.N_at.push_back(st.N);
            Field P(st.grid.cells());
            for (int c = 0; c < st.grid.cells(); ++c) P[c] = st.ps[c] + st.ph[c];
            out.P_at.push_back(std::move(P));
            ++next_sample;
        }
    };
    take_samples(s);
    for (long k = 0; k < nsteps; ++k) {
        step_micro(s, p, sc, dt);
        const ResidualNorms r_new = residual_constraint(s, p);
        out.residual_l2sq += 0.5 * dt * (r_old.l2 * r_old.l2 + r_new.l2 * r_new.l2);
        out.residual_l1 += 0.5 * dt * (r_old.l1 + r_new.l1);
        r_old = r_new;
        take_samples(s);
    }
    return out;
}

// Limit-system reference on the same grid and sample times.
MemberResult run_limit_reference(const SweepConfig& cfg, const std::vector<double>& sample_times) {
    ModelParams p = cfg.params;
    p.epsilon.reset();
    SimState s;
    s.grid = cfg.grid;
    s.micro = false;
    s.N = cfg.N0;
    s.P = cfg.P0;

    SolverConfig sc = cfg.solver;
    MemberResult out;
    std::size_t next_sample = 0;
    double dt = std::min(sc.dt_max, stable_dt_limit(s, p, sc));
    auto take_samples = [&](const SimState& st) {
        while (next_sample < sample_times.size() &&
               st.t >= sample_times[next_sample] - 0.5 * dt) {
            out.N_at.push_back(st.N);
            out.P_at.push_back(st.P);
            ++next_sample;
        }
    };
    take_samples(s);
    while (s.t < sc.t_end && next_sample < sample_times.size()) {
        dt = std::min({sc.dt_max, stable_dt_limit(s, p, sc), sc.t_end - s.t});
        step_limit(s, p, sc, dt);
        take_samples(s);
    }
    return out;
}

double dist_l2_spacetime(const Grid& g, const std::vector<double>& times,
                         const MemberResult& a, const MemberResult& b) {
    const std::size_t n = std::min({times.size(), a.N_at.size(), b.N_at.size()});
    std::vector<double> sq(n);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (int c = 0; c < g.cells(); ++c) {
            const double dn = a.N_at[k][c] - b.N_at[k][c];
            const double dp = a.P_at[k][c] - b.P_at[k][c];
            s += dn * dn + dp * dp;
        }
        sq[k] = s * g.cell_volume();
    }
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k)
        integral += 0.5 * (times[k + 1] - times[k]) * (sq[k] + sq[k + 1]);
    return std::sqrt(integral);
}

}  // namespace

ConvergenceReport epsilon_sweep(const SweepConfig& cfg) {
    if (cfg.ladder.size() < 2) throw ConfigError("epsilon ladder needs at least 2 members");
    for (std::size_t i = 1; i < cfg.ladder.size(); ++i)
        if (!(cfg.ladder[i] < cfg.ladder[i - 1]))
            throw ConfigError("epsilon ladder must be strictly decreasing");
    if (cfg.N0.empty() || cfg.P0.empty())
        throw ConfigError("epsilon_sweep: initial profiles not set");
    for (double v : cfg.N0)
        if (!(v > 0.0)) throw ConfigError("epsilon_sweep requires inf N0 > 0");

    // Shared output sampling for every run of the sweep.
    const int n_samples = 64;
    std::vector<double> sample_times(n_samples);
    for (int i = 0; i < n_samples; ++i)
        sample_times[i] = cfg.solver.t_end * double(i) / (n_samples - 1);

    const MemberResult limit = run_limit_reference(cfg, sample_times);

    ConvergenceReport rep;
    rep.points.resize(cfg.ladder.size());
    std::atomic<std::size_t> next{0};
    auto work = [&](std::size_t i) {
        LadderPoint pt;
        pt.epsilon = cfg.ladder[i];
        try {
            const MemberResult m = run_member(cfg, cfg.ladder[i], sample_times);
            pt.residual_l2sq = m.residual_l2sq;
            pt.residual_l1 = m.residual_l1;
            pt.dist_l2 = dist_l2_spacetime(cfg.grid, sample_times, m, limit);
            pt.ok = true;
        } catch (const std::exception& e) {
            pt.error = e.what();
        }
        rep.points[i] = std::move(pt);
    };
    if (cfg.threads <= 1) {
        for (std::size_t i = 0; i < cfg.ladder.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        const int n = std::min<int>(cfg.threads, int(cfg.ladder.size()));
        for (int t = 0; t < n; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cfg.ladder.size();
                     i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    rep.complete = std::all_of(rep.points.begin(), rep.points.end(),
                               [](const LadderPoint& p) { return p.ok; });
    if (rep.complete) {
        std::vector<double> eps, l2sq, l1;
        bool positive = true;
        for (const LadderPoint& p : rep.points) {
            eps.push_back(p.epsilon);
            l2sq.push_back(p.residual_l2sq);
            l1.push_back(p.residual_l1);
            positive = positive && p.residual_l2sq > 0.0 && p.residual_l1 > 0.0;
        }
        // identically-zero residual ladders (invariant manifolds) have no rate
        if (eps.size() >= 3 && positive) {
            rep.slope_l2sq = rate_fit(eps, l2sq);
            rep.slope_l1 = rate_fit(eps, l1);
        }
    }
    return rep;
}

}  // namespace predprey
