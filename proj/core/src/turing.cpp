#include "predprey/turing.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "predprey/errors.hpp"
#include "predprey/kinetics.hpp"

namespace predprey {

namespace {

// Strict sign decisions at a relative tolerance on the coefficient
// magnitude; ties classify as non-Turing, matching the strict inequalities
// that define the instability.
constexpr double kStrictTol = 1e-12;

}  // namespace

const char* to_string(RegionCase c) {
    switch (c) {
        case RegionCase::NoCoexistence: return "NoCoexistence";
        case RegionCase::NoTuringBoth: return "NoTuringBoth";
        case RegionCase::LinearOnly: return "LinearOnly";
        case RegionCase::BothWithInclusion: return "BothWithInclusion";
    }
    return "?";
}

double dp_effective(double D2, double D3, const NondimParams& nd) {
    if (!(nd.Gamma > 2.0 * nd.mu))
        throw PreconditionError("D_P undefined: Gamma <= 2 mu (E* cannot exist)");
    const double w = 2.0 * nd.mu / nd.Gamma;
    return D2 * (1.0 - w) + D3 * w;
}

CrossLinearization cross_linearization(double D1, double D2, double D3, const NondimParams& nd) {
    (void)D1;
    const JacobianStar J = jacobian_at_estar(nd);  // throws when E* absent
    const double g2m = nd.Gamma - 2.0 * nd.mu;
    CrossLinearization cl;
    cl.JD21 = -((D2 - D3) / J.Q_star) * (g2m / nd.Gamma) * J.P_star;
    cl.JD22 = (D2 / J.Q_star) * (nd.gamma + J.P_star * g2m / nd.Gamma) +
              (D3 / J.Q_star) * 2.0 * nd.mu * nd.gamma / g2m;
    cl.DP = dp_effective(D2, D3, nd);
    return cl;
}

namespace {

// Quadratic coefficients of det M(lambda) = A l^2 - B l + det J, plus the
// natural magnitude of B's terms for the strictness tolerance.
struct DispersionQuadratic {
    double A, B, detJ, scaleB;
};

DispersionQuadratic quadratic_of(const DiffusionModel& m, const JacobianStar& J,
                                 const CrossLinearization& cl) {
    DispersionQuadratic q;
    q.detJ = J.det();
    switch (m.variant) {
        case DiffusionVariant::LinearD2:
        case DiffusionVariant::LinearDP: {
            const double D = m.variant == DiffusionVariant::LinearD2 ? m.D2 : cl.DP;
            q.A = D * m.D1;
            q.B = m.D1 * J.J22 + D * J.J11;
            q.scaleB = std::abs(m.D1 * J.J22) + std::abs(D * J.J11);
            break;
        }
        case DiffusionVariant::Cross: {
            q.A = m.D1 * cl.JD22;
            q.B = cl.JD22 * J.J11 + m.D1 * J.J22 - J.J12 * cl.JD21;
            q.scaleB = std::abs(cl.JD22 * J.J11) + std::abs(m.D1 * J.J22) +
                       std::abs(J.J12 * cl.JD21);
            break;
        }
    }
    return q;
}

// Open negativity interval of A l^2 - B l + det, via the numerically stable
// root pair q = (B + sqrt(disc))/2, roots q/A and det/q.
Interval negativity_interval(double A, double B, double det, double scaleB) {
    Interval iv;
    if (!(B > kStrictTol * scaleB)) return iv;
    const double disc = B * B - 4.0 * A * det;
    const double scaleD = B * B + std::abs(4.0 * A * det);
    if (!(disc > kStrictTol * scaleD)) return iv;
    const double q = (B + std::sqrt(disc)) / 2.0;
    iv.lo = det / q;
    iv.hi = q / A;
    iv.empty = false;
    return iv;
}

}  // namespace

double det_m(double lambda, const DiffusionModel& m, const JacobianStar& J,
             const CrossLinearization& cl) {
    const DispersionQuadratic q = quadratic_of(m, J, cl);
    return q.A * lambda * lambda - q.B * lambda + q.detJ;
}

double tr_m(double lambda, const DiffusionModel& m, const JacobianStar& J,
            const CrossLinearization& cl) {
    double Deff = 0.0;
    switch (m.variant) {
        case DiffusionVariant::LinearD2: Deff = m.D2; break;
        case DiffusionVariant::LinearDP: Deff = cl.DP; break;
        case DiffusionVariant::Cross: Deff = cl.JD22; break;
    }
    return J.trace() - (m.D1 + Deff) * lambda;
}

double growth_rate(double lambda, const DiffusionModel& m, const JacobianStar& J,
                   const CrossLinearization& cl) {
    const double tr = tr_m(lambda, m, J, cl);
    const double det = det_m(lambda, m, J, cl);
    const double disc = tr * tr - 4.0 * det;
    return disc >= 0.0 ? (tr + std::sqrt(disc)) / 2.0 : tr / 2.0;
}

Interval turing_interval(const DiffusionModel& m, const JacobianStar& J,
                         const CrossLinearization& cl) {
    const DispersionQuadratic q = quadratic_of(m, J, cl);
    return negativity_interval(q.A, q.B, q.detJ, q.scaleB);
}

DispersionCurve dispersion_curve(const DiffusionModel& m, const JacobianStar& J,
                                 const CrossLinearization& cl,
                                 const std::vector<double>& lambdas) {
    DispersionCurve c;
    c.lambdas = lambdas;
    c.trace_vals.reserve(lambdas.size());
    c.det_vals.reserve(lambdas.size());
    for (double l : lambdas) {
        c.trace_vals.push_back(tr_m(l, m, J, cl));
        c.det_vals.push_back(det_m(l, m, J, cl));
    }
    c.turing = turing_interval(m, J, cl);
    return c;
}

BoundaryCurves boundary_curves(const JacobianStar& J, double D1, double D_max, int samples) {
    BoundaryCurves bc;
    if (!(J.J11 > 0.0)) return bc;  // no Turing instability for any D
    bc.no_region = false;
    bc.Dhat = -D1 * J.J22 / J.J11;
    const double detJ = J.det();
    const double cross = std::sqrt(-J.J12 * J.J21);
    const double root = std::sqrt(detJ);
    bc.Dhat1 = (D1 / (J.J11 * J.J11)) * (root - cross) * (root - cross);
    bc.Dhat2 = (D1 / (J.J11 * J.J11)) * (root + cross) * (root + cross);

    if (samples < 2) samples = 2;
    const double Dtop = std::max(D_max, 2.0 * bc.Dhat2);
    bc.D.reserve(samples);
    bc.sol_min.reserve(samples);
    bc.sol_max.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        // geometric spacing from Dhat2 (coincident roots) to Dtop
        const double D = bc.Dhat2 * std::pow(Dtop / bc.Dhat2, double(i) / (samples - 1));
        const double B = D1 * J.J22 + D * J.J11;
        const double disc = std::max(B * B - 4.0 * D1 * D * detJ, 0.0);
        const double q = (B + std::sqrt(disc)) / 2.0;
        bc.D.push_back(D);
        bc.sol_min.push_back(detJ / q);
        bc.sol_max.push_back(q / (D1 * D));
    }
    return bc;
}

RegionComparison compare_regions(double D1, double D2, double D3, const NondimParams& nd) {
    if (!(D2 > D3))
        throw PreconditionError("region comparison requires D2 > D3 (searching predators diffuse "
                                "faster than handling predators)");
    const JacobianStar J = jacobian_at_estar(nd);
    const CrossLinearization cl = cross_linearization(D1, D2, D3, nd);

    RegionComparison rc;
    rc.AL = D1 * cl.DP;
    rc.AC = D1 * cl.JD22;
    rc.BL = cl.DP * J.J11 + D1 * J.J22;
    rc.BC = cl.JD22 * J.J11 + D1 * J.J22 - J.J12 * cl.JD21;

    const DiffusionModel lin{DiffusionVariant::LinearDP, D1, D2, D3};
    const DiffusionModel crs{DiffusionVariant::Cross, D1, D2, D3};
    rc.linear = turing_interval(lin, J, cl);
    rc.cross = turing_interval(crs, J, cl);

    if (rc.linear.empty && rc.cross.empty)
        rc.which = RegionCase::NoTuringBoth;
    else if (rc.cross.empty)
        rc.which = RegionCase::LinearOnly;
    else
        rc.which = RegionCase::BothWithInclusion;
    return rc;
}

double mode_eigenvalue_1d(int k, double L) {
    const double w = k * M_PI / L;
    return w * w;
}

double mode_eigenvalue_2d(int k, int m, double Lx, double Ly) {
    return M_PI * M_PI * (double(k) * k / (Lx * Lx) + double(m) * m / (Ly * Ly));
}

std::vector<int> unstable_modes_1d(const Interval& iv, double L, int k_max) {
    std::vector<int> ks;
    for (int k = 1; k <= k_max; ++k)
        if (iv.contains(mode_eigenvalue_1d(k, L))) ks.push_back(k);
    return ks;
}

namespace {

double* scan_field(ModelParams& p, const std::string& name) {
    if (name == "r0") return &p.r0;
    if (name == "eta") return &p.eta;
    if (name == "alpha") return &p.alpha;
    if (name == "gamma_tilde") return &p.gamma_tilde;
    if (name == "Gamma") return &p.Gamma;
    if (name == "mu") return &p.mu;
    if (name == "xi") return &p.xi;
    if (name == "d1") return &p.d1;
    if (name == "d2") return &p.d2;
    if (name == "d3") return &p.d3;
    throw ConfigError("unknown scan parameter '" + name + "'");
}

double scan_coord(double lo, double hi, int n, int i, bool log_spaced) {
    if (n <= 1) return lo;
    const double t = double(i) / (n - 1);
    if (log_spaced) return lo * std::pow(hi / lo, t);
    return lo + t * (hi - lo);
}

}  // namespace

HollingPoint holling_point(const ModelParams& p) {
    HollingPoint hp;
    if (!(p.Gamma > p.mu)) return hp;
    const double N = p.mu * p.gamma_tilde / (p.alpha * (p.Gamma - p.mu));
    if (p.eta > 0.0 && !(p.eta * N < 1.0)) return hp;  // N* >= carrying capacity
    const double denom = p.alpha * N + p.gamma_tilde;
    const double P = p.r0 * (1.0 - p.eta * N) * denom / (p.gamma_tilde * p.alpha);
    if (!(P > 0.0)) return hp;

    hp.coexists = true;
    hp.N = N;
    hp.P = P;
    hp.J.N_star = N;
    hp.J.P_star = P;
    hp.J.J11 = p.r0 * (1.0 - 2.0 * p.eta * N) -
               p.alpha * p.gamma_tilde * p.gamma_tilde * P / (denom * denom);
    hp.J.J12 = -p.gamma_tilde * p.alpha * N / denom;
    hp.J.J21 = p.Gamma * p.alpha * p.gamma_tilde * P / (denom * denom);
    hp.J.J22 = p.Gamma * p.alpha * N / denom - p.mu;  // 0 at E* up to rounding
    hp.cl.JD22 = holling_limit_coefficient(N, p);
    hp.cl.JD21 = P * p.alpha * p.gamma_tilde * (p.d3 - p.d2) / (denom * denom);
    hp.cl.DP = hp.cl.JD22;  // effective constant rate f(N*)
    return hp;
}

namespace {

ScanCell analyze_cell(const ModelParams& params) {
    ScanCell cell;
    if (params.xi > 0.0) {
        const NondimResult nr = nondimensionalize(params);
        if (!coexistence_exists(nr.nd)) return cell;
        cell.coexists = true;
        cell.J11 = jacobian_at_estar(nr.nd).J11;
        const RegionComparison rc = compare_regions(nr.nd.D1, nr.nd.D2, nr.nd.D3, nr.nd);
        cell.which = rc.which;
        cell.linear = rc.linear;
        cell.cross = rc.cross;
        return cell;
    }

    const HollingPoint hp = holling_point(params);
    if (!hp.coexists) return cell;
    cell.coexists = true;
    cell.J11 = hp.J.J11;
    const DiffusionModel lin{DiffusionVariant::LinearDP, params.d1, params.d2, params.d3};
    const DiffusionModel crs{DiffusionVariant::Cross, params.d1, params.d2, params.d3};
    cell.linear = turing_interval(lin, hp.J, hp.cl);
    cell.cross = turing_interval(crs, hp.J, hp.cl);
    if (cell.linear.empty && cell.cross.empty)
        cell.which = RegionCase::NoTuringBoth;
    else if (cell.cross.empty)
        cell.which = RegionCase::LinearOnly;
    else
        cell.which = RegionCase::BothWithInclusion;
    return cell;
}

}  // namespace

std::vector<ScanCell> parameter_scan(const ModelParams& base, const ScanSpec& spec, int threads) {
    {
        ModelParams probe = base;  // validate names before spawning workers
        scan_field(probe, spec.p1);
        scan_field(probe, spec.p2);
    }
    if (spec.n1 < 1 || spec.n2 < 1) throw ConfigError("scan grid must be at least 1x1");
    if ((spec.log1 && (spec.lo1 <= 0 || spec.hi1 <= 0)) ||
        (spec.log2 && (spec.lo2 <= 0 || spec.hi2 <= 0)))
        throw ConfigError("log-spaced scan ranges must be strictly positive");

    const int total = spec.n1 * spec.n2;
    std::vector<ScanCell> cells(total);

    auto work = [&](int idx) {
        const int i = idx / spec.n2;
        const int j = idx % spec.n2;
        const double v1 = scan_coord(spec.lo1, spec.hi1, spec.n1, i, spec.log1);
        const double v2 = scan_coord(spec.lo2, spec.hi2, spec.n2, j, spec.log2);
        ModelParams params = base;
        *scan_field(params, spec.p1) = v1;
        *scan_field(params, spec.p2) = v2;
        ScanCell cell;
        try {
            cell = analyze_cell(params);
        } catch (const std::exception& e) {
            cell.error = e.what();  // recorded in-band, never aborts the scan
        }
        cell.p1 = v1;
        cell.p2 = v2;
        cells[idx] = cell;
    };

    if (threads <= 1) {
        for (int idx = 0; idx < total; ++idx) work(idx);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int n = std::min<int>(threads, total);
        pool.reserve(n);
        for (int t = 0; t < n; ++t)
            pool.emplace_back([&] {
                for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) work(idx);
            });
        for (auto& th : pool) th.join();
    }
    return cells;
}

}  // namespace predprey
