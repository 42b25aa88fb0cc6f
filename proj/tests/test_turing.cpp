#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "predprey/errors.hpp"
#include "predprey/grid.hpp"
#include "predprey/kinetics.hpp"
#include "predprey/turing.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace predprey;
namespace nv = fixtures::ndplus_vals;

namespace {

NondimParams random_coexisting(oracle::Rng& rng) {
    for (;;) {
        NondimParams nd;
        nd.r = rng.log_uniform(1e-2, 1e2);
        nd.nu = rng.log_uniform(1e-2, 1e2);
        nd.gamma = rng.log_uniform(1e-2, 1e2);
        nd.Gamma = rng.log_uniform(1e-2, 1e2);
        nd.mu = rng.log_uniform(1e-2, 1e2);
        nd.D3 = rng.log_uniform(1e-3, 1.0);
        nd.D2 = nd.D3 * rng.log_uniform(1.0 + 1e-9, 1e3);
        nd.D1 = rng.log_uniform(1e-4, 1.0);
        if (coexistence_exists(nd)) return nd;
    }
}

}  // namespace

TEST_CASE("effective constant rate D_P") {
    const NondimParams nd = fixtures::ref();
    CHECK(dp_effective(1.0, 0.1, nd) == doctest::Approx(0.64).epsilon(1e-15));
    CHECK(dp_effective(0.7, 0.7, nd) == doctest::Approx(0.7).epsilon(1e-15));
    NondimParams bad = nd;
    bad.Gamma = 1.9;
    CHECK_THROWS_AS((void)dp_effective(1.0, 0.1, bad), PreconditionError);
    // convexity bound
    oracle::Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const double D3 = rng.log_uniform(1e-3, 1.0);
        const double D2 = D3 * rng.log_uniform(1.0, 1e3);
        const double dp = dp_effective(D2, D3, nd);
        CHECK(dp >= D3 * (1 - 1e-14));
        CHECK(dp <= D2 * (1 + 1e-14));
    }
}

TEST_CASE("cross linearization at the reference point") {
    const NondimParams nd = fixtures::ref();
    const CrossLinearization cl = cross_linearization(0.01, 1.0, 0.1, nd);
    CHECK(cl.JD21 == doctest::Approx(fixtures::ref_vals::JD21).epsilon(1e-13));
    CHECK(cl.JD22 == doctest::Approx(fixtures::ref_vals::JD22).epsilon(1e-13));
    CHECK(cl.DP == doctest::Approx(fixtures::ref_vals::DP).epsilon(1e-15));
    CHECK(cl.DP < cl.JD22);
}

TEST_CASE("cross linearization degenerates when D2 = D3 and scales linearly") {
    const NondimParams nd = fixtures::ref();
    const CrossLinearization eq = cross_linearization(0.01, 0.8, 0.8, nd);
    CHECK(eq.JD21 == 0.0);
    CHECK(eq.JD22 == doctest::Approx(0.8).epsilon(1e-13));
    const CrossLinearization a = cross_linearization(0.01, 1.0, 0.1, nd);
    const CrossLinearization b = cross_linearization(0.01, 2.0, 0.2, nd);
    CHECK(b.JD21 == doctest::Approx(2.0 * a.JD21).epsilon(1e-15));
    CHECK(b.JD22 == doctest::Approx(2.0 * a.JD22).epsilon(1e-15));
}

TEST_CASE("cross linearization matches a mode-wise numerical linearization") {
    // finite-difference linearization of Delta(f(N,P) P) around E* restricted
    // to a single discrete Fourier mode
    const NondimParams nd = fixtures::ndplus();
    const JacobianStar J = jacobian_at_estar(nd);
    const CrossLinearization cl = cross_linearization(nd.D1, nd.D2, nd.D3, nd);

    const int n = 512;
    const double L = 10.0;
    const Grid g = Grid::line(n, L);
    const int k = 3;
    const double lam_h = (4.0 / (g.hx * g.hx)) * std::pow(std::sin(k * M_PI * g.hx / (2 * L)), 2);

    Field mode(n), w(n), lap(n);
    for (int i = 0; i < n; ++i) mode[i] = std::cos(k * M_PI * (i + 0.5) / n);

    auto project = [&](const Field& f) {
        double a = 0.0;
        for (int i = 0; i < n; ++i) a += f[i] * mode[i];
        return 2.0 * a / n;
    };
    auto apply = [&](double dN, double dP) {
        for (int i = 0; i < n; ++i) {
            const double N = J.N_star + dN * mode[i];
            const double P = J.P_star + dP * mode[i];
            w[i] = cross_diff_coefficient(N, P, nd) * P;
        }
        laplacian_neumann(g, w, lap);
        return project(lap);
    };

    const double delta = 1e-5;
    // centered difference in the perturbation amplitude; the discrete
    // eigenvalue lam_h removes the stencil's own O(h^2) error
    const double jd21 = (apply(delta, 0.0) - apply(-delta, 0.0)) / (2.0 * delta) / -lam_h;
    const double jd22 = (apply(0.0, delta) - apply(0.0, -delta)) / (2.0 * delta) / -lam_h;
    CHECK(jd21 == doctest::Approx(cl.JD21).epsilon(1e-5));
    CHECK(jd22 == doctest::Approx(cl.JD22).epsilon(1e-5));
}

TEST_CASE("dispersion determinant at lambda = 0 is det J for every variant") {
    const NondimParams nd = fixtures::ndplus();
    const JacobianStar J = jacobian_at_estar(nd);
    const CrossLinearization cl = cross_linearization(nd.D1, nd.D2, nd.D3, nd);
    for (DiffusionVariant v :
         {DiffusionVariant::LinearD2, DiffusionVariant::LinearDP, DiffusionVariant::Cross}) {
        const DiffusionModel m{v, nd.D1, nd.D2, nd.D3};
        CHECK(det_m(0.0, m, J, cl) == J.det());
    }
}

TEST_CASE("reference set admits no Turing instability (J11 < 0)") {
    const NondimParams nd = fixtures::ref();
    const JacobianStar J = jacobian_at_estar(nd);
    const CrossLinearization cl = cross_linearization(nd.D1, nd.D2, nd.D3, nd);
    for (DiffusionVariant v :
         {DiffusionVariant::LinearD2, DiffusionVariant::LinearDP, DiffusionVariant::Cross}) {
        const DiffusionModel m{v, nd.D1, nd.D2, nd.D3};
        CHECK(turing_interval(m, J, cl).empty);
        for (double lam : {0.0, 0.1, 1.0, 10.0, 100.0, 1e4}) CHECK(det_m(lam, m, J, cl) > 0.0);
    }
}

TEST_CASE("nd+ dispersion: negative determinant inside the frozen interval") {
    const NondimParams nd = fixtures::ndplus();
    const JacobianStar J = jacobian_at_estar(nd);
    const CrossLinearization cl = cross_linearization(nd.D1, nd.D2, nd.D3, nd);
    const DiffusionModel m{DiffusionVariant::Cross, nd.D1, nd.D2, nd.D3};
    const double mid = 0.5 * (nv::cross_lo + nv::cross_hi);
    CHECK(det_m(mid, m, J, cl) < 0.0);
    CHECK(det_m(nv::cross_lo * 0.5, m, J, cl) > 0.0);
    CHECK(det_m(nv::cross_hi * 1.5, m, J, cl) > 0.0);
}

TEST_CASE("turing_interval endpoints equal the boundary-curve roots at D = DP") {
    const NondimParams nd = fixtures::ndplus();
    const JacobianStar J = jacobian_at_estar(nd);
    const CrossLinearization cl = cross_linearization(nd.D1, nd.D2, nd.D3, nd);
    const DiffusionModel m{DiffusionVariant::LinearDP, nd.D1, nd.D2, nd.D3};
    const Interval iv = turing_interval(m, J, cl);
    REQUIRE_FALSE(iv.empty);

    // same roots from the generic boundary formula, independent code path
    const double D = cl.DP;
    const double B = nd.D1 * J.J22 + D * J.J11;
    const double disc = B * B - 4.0 * nd.D1 * D * J.det();
    REQUIRE(disc > 0.0);
    const double lo = (B - std::sqrt(disc)) / (2.0 * nd.D1 * D);
    const double hi = (B + std::sqrt(disc)) / (2.0 * nd.D1 * D);
    CHECK(iv.lo == doctest::Approx(lo).epsilon(1e-10));
    CHECK(iv.hi == doctest::Approx(hi).epsilon(1e-10));
}

TEST_CASE("tangent dispersion parabola yields an empty interval") {
    JacobianStar J{};
    J.J11 = 1.0;
    J.J22 = 1.0;
    J.J12 = 0.0;
    J.J21 = 5.0;  // det = 1
    CrossLinearization cl{0.0, 0.0, 1.0};
    const DiffusionModel m{DiffusionVariant::LinearDP, 1.0, 1.0, 1.0};
    // det M = l^2 - 2 l + 1 = (l-1)^2: discriminant exactly zero
    CHECK(turing_interval(m, J, cl).empty);
}

TEST_CASE("boundary curves of the nd+ fixture") {
    const JacobianStar J = jacobian_at_estar(fixtures::ndplus());
    const BoundaryCurves bc = boundary_curves(J, 0.01, 1.0, 128);
    REQUIRE_FALSE(bc.no_region);
    CHECK(bc.Dhat == doctest::Approx(nv::Dhat).epsilon(1e-12));
    CHECK(bc.Dhat1 == doctest::Approx(nv::Dhat1).epsilon(1e-11));
    CHECK(bc.Dhat2 == doctest::Approx(nv::Dhat2).epsilon(1e-11));
    CHECK(bc.Dhat1 < bc.Dhat);
    CHECK(bc.Dhat < bc.Dhat2);

    // at Dhat2 the two roots coincide at a positive value
    CHECK(bc.D.front() == doctest::Approx(nv::Dhat2).epsilon(1e-12));
    CHECK(bc.sol_min.front() == doctest::Approx(nv::sol_at_Dhat2).epsilon(1e-5));
    CHECK(bc.sol_max.front() == doctest::Approx(nv::sol_at_Dhat2).epsilon(1e-5));

    // real, positive, and monotone widening past Dhat2
    for (std::size_t i = 0; i < bc.D.size(); ++i) {
        CHECK(bc.sol_min[i] > 0.0);
        CHECK(bc.sol_max[i] > 0.0);
        if (i > 0) {
            CHECK(bc.sol_min[i] <= bc.sol_min[i - 1] * (1 + 1e-12));
            CHECK(bc.sol_max[i] >= bc.sol_max[i - 1] * (1 - 1e-12));
        }
    }

    // limits: min branch -> 0, max branch -> J11/D1
    const BoundaryCurves far = boundary_curves(J, 0.01, 1e8, 4);
    CHECK(far.sol_max.back() == doctest::Approx(J.J11 / 0.01).epsilon(1e-3));
    CHECK(far.sol_min.back() < 1e-4);
    CHECK(far.sol_max.back() > far.sol_max.front());

    // interval at 2*Dhat2 strictly contains the interval at 1.1*Dhat2
    auto roots_at = [&](double D) {
        const double B = 0.01 * J.J22 + D * J.J11;
        const double s = std::sqrt(B * B - 4.0 * 0.01 * D * J.det());
        return std::pair{(B - s) / (2.0 * 0.01 * D), (B + s) / (2.0 * 0.01 * D)};
    };
    const auto narrow = roots_at(1.1 * bc.Dhat2);
    const auto wide = roots_at(2.0 * bc.Dhat2);
    CHECK(wide.first < narrow.first);
    CHECK(wide.second > narrow.second);
}

TEST_CASE("boundary curves report NoRegion for J11 <= 0") {
    const JacobianStar J = jacobian_at_estar(fixtures::ref());
    CHECK(boundary_curves(J, 0.01, 1.0).no_region);
}

TEST_CASE("region comparison: the three recorded cases") {
    SUBCASE("reference set, any D: no Turing for either model") {
        const NondimParams nd = fixtures::ref();
        const RegionComparison rc = compare_regions(nd.D1, nd.D2, nd.D3, nd);
        CHECK(rc.which == RegionCase::NoTuringBoth);
    }
    SUBCASE("nd+, D2 = 0.10: below both thresholds") {
        const NondimParams nd = fixtures::ndplus(0.10);
        const RegionComparison rc = compare_regions(nd.D1, nd.D2, nd.D3, nd);
        CHECK(rc.which == RegionCase::NoTuringBoth);
    }
    SUBCASE("nd+, D2 = 0.15: linear only") {
        const NondimParams nd = fixtures::ndplus(0.15);
        const RegionComparison rc = compare_regions(nd.D1, nd.D2, nd.D3, nd);
        CHECK(rc.which == RegionCase::LinearOnly);
        CHECK(rc.linear.lo == doctest::Approx(nv::lin15_lo).epsilon(1e-11));
        CHECK(rc.linear.hi == doctest::Approx(nv::lin15_hi).epsilon(1e-11));
        CHECK(rc.cross.empty);
    }
    SUBCASE("nd+, D2 = 1.0: both, cross strictly included") {
        const NondimParams nd = fixtures::ndplus(1.0);
        const RegionComparison rc = compare_regions(nd.D1, nd.D2, nd.D3, nd);
        CHECK(rc.which == RegionCase::BothWithInclusion);
        CHECK(rc.linear.lo == doctest::Approx(nv::lin_lo).epsilon(1e-11));
        CHECK(rc.linear.hi == doctest::Approx(nv::lin_hi).epsilon(1e-11));
        CHECK(rc.cross.lo == doctest::Approx(nv::cross_lo).epsilon(1e-11));
        CHECK(rc.cross.hi == doctest::Approx(nv::cross_hi).epsilon(1e-11));
        CHECK(rc.cross.strictly_inside(rc.linear));
        // half-width comparison of the two parabolas
        const double detJ = jacobian_at_estar(nd).det();
        const double wl = std::sqrt(rc.BL * rc.BL - 4 * rc.AL * detJ) / (2 * rc.AL);
        const double wc = std::sqrt(rc.BC * rc.BC - 4 * rc.AC * detJ) / (2 * rc.AC);
        CHECK(wl > wc);
    }
}

TEST_CASE("coefficient and inclusion theorems over random draws") {
    oracle::Rng rng(60622);
    int nonempty_cross = 0;
    for (int i = 0; i < 10000; ++i) {
        const NondimParams nd = random_coexisting(rng);
        const JacobianStar J = jacobian_at_estar(nd);
        const CrossLinearization cl = cross_linearization(nd.D1, nd.D2, nd.D3, nd);
        const RegionComparison rc = compare_regions(nd.D1, nd.D2, nd.D3, nd);

        REQUIRE(cl.JD21 < 0.0);
        REQUIRE(cl.JD22 > 0.0);
        REQUIRE(cl.DP > nd.D3);
        REQUIRE(cl.DP < nd.D2);
        REQUIRE(cl.DP < cl.JD22);
        REQUIRE(rc.AC > rc.AL);
        REQUIRE(rc.BL > rc.BC);

        if (J.J11 > 0.0) {
            const BoundaryCurves bc = boundary_curves(J, nd.D1, 1.0, 2);
            REQUIRE(bc.Dhat1 < bc.Dhat);
            REQUIRE(bc.Dhat < bc.Dhat2);
        }
        // trace of the characteristic matrix stays negative when tr J* < 0
        if (J.trace() < 0.0) {
            for (DiffusionVariant v : {DiffusionVariant::LinearD2, DiffusionVariant::LinearDP,
                                       DiffusionVariant::Cross}) {
                const DiffusionModel m{v, nd.D1, nd.D2, nd.D3};
                for (double lam : {0.0, 1e-3, 1.0, 1e3}) REQUIRE(tr_m(lam, m, J, cl) < 0.0);
            }
        }
        // inclusion logic
        if (!rc.cross.empty) {
            ++nonempty_cross;
            REQUIRE_FALSE(rc.linear.empty);
            REQUIRE(rc.cross.strictly_inside(rc.linear));
        }
        if (rc.linear.empty) REQUIRE(rc.cross.empty);
    }
    CHECK(nonempty_cross > 0);  // the draw set exercises the nonempty branch
}

TEST_CASE("mode quantization on [0, 20]") {
    Interval iv;
    iv.empty = false;
    iv.lo = nv::cross_lo;
    iv.hi = nv::cross_hi;
    const auto ks = unstable_modes_1d(iv, 20.0, 64);
    const std::vector<int> expect{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    CHECK(ks == expect);
    for (int k : ks) CHECK(iv.contains(mode_eigenvalue_1d(k, 20.0)));
    CHECK_FALSE(iv.contains(mode_eigenvalue_1d(2, 20.0)));
    CHECK_FALSE(iv.contains(mode_eigenvalue_1d(14, 20.0)));
    CHECK(mode_eigenvalue_2d(3, 0, 20.0, 7.0) == doctest::Approx(mode_eigenvalue_1d(3, 20.0)));
}

TEST_CASE("holling point: exact rational fixture") {
    const HollingPoint hp = holling_point(fixtures::holling_clean());
    REQUIRE(hp.coexists);
    CHECK(hp.N == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(hp.P == doctest::Approx(8.0 / 9).epsilon(1e-15));
    CHECK(hp.J.J11 == doctest::Approx(-1.0 / 6).epsilon(1e-13));
    CHECK(hp.J.J12 == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(hp.J.J21 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(hp.J.J22) < 1e-14);  // prey-dependent response
    CHECK(hp.cl.JD22 == doctest::Approx(0.04).epsilon(1e-13));
    CHECK(hp.cl.JD21 == doctest::Approx(-0.02).epsilon(1e-13));
}

TEST_CASE("holling point: existence boundaries") {
    ModelParams p = fixtures::holling_clean();
    p.Gamma = p.mu;  // N* undefined
    CHECK_FALSE(holling_point(p).coexists);
    p = fixtures::holling_clean();
    p.Gamma = 1.9;  // N* = 1/0.9 > k = 1
    CHECK_FALSE(holling_point(p).coexists);
}

TEST_CASE("parameter scan: all cells fail coexistence") {
    ModelParams base = fixtures::ref_dim();
    ScanSpec spec;
    spec.p1 = "Gamma";
    spec.lo1 = 0.1;
    spec.hi1 = 0.2;
    spec.n1 = 2;
    spec.p2 = "mu";
    spec.lo2 = 1.0;
    spec.hi2 = 2.0;
    spec.n2 = 2;
    const auto cells = parameter_scan(base, spec);
    REQUIRE(cells.size() == 4);
    for (const auto& c : cells) {
        CHECK_FALSE(c.coexists);
        CHECK(c.which == RegionCase::NoCoexistence);
        CHECK(c.error.empty());
    }
}

TEST_CASE("parameter scan: Holling variant has no Turing cells") {
    ModelParams base = fixtures::holling_clean();  // d3 < d2
    ScanSpec spec;
    spec.p1 = "Gamma";
    spec.lo1 = 0.1;
    spec.hi1 = 10.0;
    spec.n1 = 20;
    spec.log1 = true;
    spec.p2 = "mu";
    spec.lo2 = 0.01;
    spec.hi2 = 5.0;
    spec.n2 = 20;
    spec.log2 = true;
    const auto cells = parameter_scan(base, spec);
    int coexisting = 0;
    for (const auto& c : cells) {
        if (c.coexists) ++coexisting;
        CHECK(c.linear.empty);
        CHECK(c.cross.empty);
    }
    CHECK(coexisting > 50);  // the grid does contain coexistence cells
}

TEST_CASE("parameter scan: BdA grid hits all three cases and is thread-invariant") {
    const ModelParams base = fixtures::ndplus_dim(1.0);
    ScanSpec spec;
    spec.p1 = "d3";
    spec.lo1 = 0.05;
    spec.hi1 = 0.9;
    spec.n1 = 12;
    spec.p2 = "mu";
    spec.lo2 = 0.2;
    spec.hi2 = 0.345;
    spec.n2 = 8;
    const auto serial = parameter_scan(base, spec, 1);
    const auto parallel = parameter_scan(base, spec, 4);
    REQUIRE(serial.size() == parallel.size());
    int counts[3] = {0, 0, 0};
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].which == parallel[i].which);
        CHECK(serial[i].J11 == parallel[i].J11);
        CHECK(serial[i].linear.lo == parallel[i].linear.lo);
        if (serial[i].which == RegionCase::NoTuringBoth) ++counts[0];
        if (serial[i].which == RegionCase::LinearOnly) ++counts[1];
        if (serial[i].which == RegionCase::BothWithInclusion) ++counts[2];
    }
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
    CHECK(counts[2] > 0);
}

TEST_CASE("parameter scan rejects unknown parameter names") {
    ScanSpec spec;
    spec.p1 = "Gamma";
    spec.p2 = "bogus";
    spec.n1 = spec.n2 = 2;
    spec.lo1 = spec.lo2 = 1.0;
    spec.hi1 = spec.hi2 = 2.0;
    CHECK_THROWS_AS((void)parameter_scan(fixtures::ref_dim(), spec), ConfigError);
}

TEST_CASE("compare_regions requires D2 > D3") {
    const NondimParams nd = fixtures::ref();
    CHECK_THROWS_AS((void)compare_regions(0.01, 0.1, 0.1, nd), PreconditionError);
}
