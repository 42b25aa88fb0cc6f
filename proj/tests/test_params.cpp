#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "predprey/errors.hpp"
#include "predprey/params.hpp"
#include "support/oracles.hpp"

using namespace predprey;

namespace {

ModelParams random_valid_params(oracle::Rng& rng) {
    ModelParams p;
    p.r0 = rng.log_uniform(1e-2, 1e2);
    p.eta = rng.log_uniform(1e-2, 1e2);
    p.alpha = rng.log_uniform(1e-2, 1e2);
    p.gamma_tilde = rng.log_uniform(1e-2, 1e2);
    p.Gamma = rng.log_uniform(1e-2, 1e2);
    p.mu = rng.log_uniform(1e-2, 1e2);
    p.xi = rng.log_uniform(1e-2, 1e2);
    p.d1 = rng.log_uniform(1e-3, 1e1);
    p.d2 = rng.log_uniform(1e-3, 1e1);
    p.d3 = rng.log_uniform(1e-3, 1e1);
    return p;
}

}  // namespace

TEST_CASE("scaling map for alpha = gamma_tilde = xi = 1") {
    ModelParams p;
    p.r0 = 2.0;
    p.eta = 0.25;  // k = 4
    p.alpha = 1.0;
    p.gamma_tilde = 1.0;
    p.Gamma = 3.0;
    p.mu = 0.5;
    p.xi = 1.0;
    p.d1 = 0.1;
    p.d2 = 0.4;
    p.d3 = 0.2;

    const auto [nd, map] = nondimensionalize(p);
    CHECK(map.Sigma == 1.0);
    CHECK(map.Pi == 1.0);
    CHECK(map.Theta == 0.5);
    // all Theta-scaled rates halved, nu = k
    CHECK(nd.r == 1.0);
    CHECK(nd.mu == 0.25);
    CHECK(nd.D1 == 0.05);
    CHECK(nd.D2 == 0.2);
    CHECK(nd.D3 == 0.1);
    CHECK(nd.nu == 4.0);
    CHECK(nd.gamma == 1.0);
    CHECK(nd.Gamma == 3.0);  // Gamma * gt * Sigma * xi
}

TEST_CASE("defining identities of the scaling") {
    oracle::Rng rng(101);
    for (int i = 0; i < 500; ++i) {
        const ModelParams p = random_valid_params(rng);
        const auto [nd, map] = nondimensionalize(p);
        CHECK(2.0 * p.alpha * map.Pi * map.Theta == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(p.alpha * map.Sigma == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(p.gamma_tilde * p.xi * map.Pi == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("doubling xi halves Pi, and the identities force Theta to double") {
    // gamma_tilde xi Pi = 1 halves Pi; then 2 alpha Pi Theta = 1 doubles Theta
    oracle::Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        ModelParams p = random_valid_params(rng);
        const auto a = nondimensionalize(p);
        p.xi *= 2.0;
        const auto b = nondimensionalize(p);
        CHECK(b.map.Pi == doctest::Approx(a.map.Pi / 2).epsilon(1e-14));
        CHECK(2.0 * p.alpha * b.map.Pi * b.map.Theta == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(b.map.Theta == doctest::Approx(2.0 * a.map.Theta).epsilon(1e-14));
        CHECK(b.map.Sigma == a.map.Sigma);
    }
}

TEST_CASE("round trip dimensionalize . nondimensionalize = identity") {
    oracle::Rng rng(2024);
    for (int i = 0; i < 500; ++i) {
        const ModelParams p = random_valid_params(rng);
        const auto [nd, map] = nondimensionalize(p);
        const ModelParams q = dimensionalize(nd, map.Theta, map.Sigma);
        CHECK(q.r0 == doctest::Approx(p.r0).epsilon(1e-12));
        CHECK(q.eta == doctest::Approx(p.eta).epsilon(1e-12));
        CHECK(q.alpha == doctest::Approx(p.alpha).epsilon(1e-12));
        CHECK(q.gamma_tilde == doctest::Approx(p.gamma_tilde).epsilon(1e-12));
        CHECK(q.Gamma == doctest::Approx(p.Gamma).epsilon(1e-12));
        CHECK(q.mu == doctest::Approx(p.mu).epsilon(1e-12));
        CHECK(q.xi == doctest::Approx(p.xi).epsilon(1e-12));
        CHECK(q.d1 == doctest::Approx(p.d1).epsilon(1e-12));
        CHECK(q.d2 == doctest::Approx(p.d2).epsilon(1e-12));
        CHECK(q.d3 == doctest::Approx(p.d3).epsilon(1e-12));
    }
}

TEST_CASE("round trip nondimensionalize . dimensionalize = identity") {
    NondimParams nd{0.15, 85.0, 0.4, 0.7, 0.29, 0.01, 1.0, 0.5};
    const ModelParams p = dimensionalize(nd, 1.0, 1.0);
    const auto [nd2, map] = nondimensionalize(p);
    CHECK(map.Theta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(map.Sigma == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(nd2.r == doctest::Approx(nd.r).epsilon(1e-14));
    CHECK(nd2.nu == doctest::Approx(nd.nu).epsilon(1e-14));
    CHECK(nd2.gamma == doctest::Approx(nd.gamma).epsilon(1e-14));
    CHECK(nd2.Gamma == doctest::Approx(nd.Gamma).epsilon(1e-14));
    CHECK(nd2.mu == doctest::Approx(nd.mu).epsilon(1e-14));
    CHECK(nd2.D2 == doctest::Approx(nd.D2).epsilon(1e-14));
}

TEST_CASE("xi = 0 has no adimensionalized form") {
    ModelParams p;
    p.eta = 1.0;
    p.xi = 0.0;
    CHECK_THROWS_WITH_AS(nondimensionalize(p),
                         doctest::Contains("adimensionalization map undefined"),
                         PreconditionError);
}

TEST_CASE("validation rejects bad parameters field by field") {
    ModelParams p;
    p.eta = 1.0;
    CHECK_NOTHROW(validate(p));
    p.r0 = -1.0;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("r0"), ConfigError);
    p.r0 = 1.0;
    p.d3 = 0.0;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("d3"), ConfigError);
    p.d3 = 1.0;
    CHECK_THROWS_WITH_AS(validate(p, true), doctest::Contains("epsilon required"), ConfigError);
    p.epsilon = -2.0;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("epsilon"), ConfigError);
}
