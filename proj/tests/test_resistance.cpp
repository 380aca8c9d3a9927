#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "condlab/environment.hpp"
#include "condlab/errors.hpp"
#include "condlab/flow.hpp"
#include "condlab/resistance.hpp"

using namespace condlab;

namespace {

struct CacheSandbox {
    std::filesystem::path dir;
    CacheSandbox() {
        dir = std::filesystem::temp_directory_path() /
              ("condlab-test-cache-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        ::setenv("CONDLAB_CACHE", dir.c_str(), 1);
    }
    ~CacheSandbox() {
        ::unsetenv("CONDLAB_CACHE");
        std::error_code ec;
        std::filesystem::remove_all(dir, ec);
    }
};

EnvironmentSpec fast1_env(std::uint64_t seed = 1) {
    return make_environment(preset_scales("fast1"), seed);
}

} // namespace

TEST_CASE("materialized weights follow the field with pinned offsets") {
    const EnvironmentSpec env = fast1_env(42);
    const WeightGrid w = materialize_weights(env, 1, 3.0, std::nullopt, false);
    // obstacle geometry at offset zero regardless of the sampled offsets
    CHECK(w.v(12, 64) == 3.0);
    CHECK(w.v(8, 104) == doctest::Approx(1.0 / 16.0));
    CHECK(w.h(1, 1) == 1.0);
    const WeightGrid halved = materialize_weights(env, 1, 3.0);
    CHECK(halved.h(1, 0) == 0.5);
    CHECK(halved.v(12, 64) == 3.0);
    CHECK_THROWS_AS(materialize_weights(env, 2), ConfigError);
}

TEST_CASE("uniform environment has conductance exactly one") {
    const EnvironmentSpec env = fast1_env(3);
    for (long a : {8L, 16L, 32L}) {
        WeightGrid w = WeightGrid::uniform(a);
        w.apply_border_halving();
        const ConductanceResult r = effective_conductance(w);
        CHECK(std::abs(r.sigma_sq - 1.0) <= 1e-10);
    }
    // eta override 1 with K = 1 flattens the field completely
    const ConductanceResult flat = effective_conductance(
        materialize_weights(env, 1, 1.0, 1.0));
    CHECK(std::abs(flat.sigma_sq - 1.0) <= 1e-10);
}

TEST_CASE("removing the strong edges loses conductance") {
    const EnvironmentSpec env = fast1_env(4);
    const ConductanceResult r = effective_conductance(env, 1, 0.0);
    CHECK(r.sigma_sq < 1.0);
    CHECK(r.sigma_sq > 0.0);
}

TEST_CASE("conductance is monotone in K") {
    const EnvironmentSpec env = fast1_env(5);
    SolveOptions opts;
    double prev = -1.0;
    for (double k : {0.0, 1.0, 2.0, 4.0, 8.0}) {
        const ConductanceResult r = effective_conductance(env, 1, k, opts);
        CHECK(r.sigma_sq >= prev - 1e-9);
        prev = r.sigma_sq;
    }
}

TEST_CASE("tuning meets its tolerance and caches") {
    CacheSandbox sandbox;
    const EnvironmentSpec env = fast1_env(6);
    const double tol = 1e-6;
    const TuneResult r = tune_k(env, 1, tol);
    CHECK_FALSE(r.cache_hit);
    CHECK(r.k_tuned > 0.0);
    CHECK(r.k_tuned <= 50.0 * 4.0);
    CHECK(std::abs(r.sigma_sq_at_k - 1.0) <= tol);
    CHECK(r.solves >= 3);
    CHECK(r.bracket_lo == 0.0);
    CHECK(r.bracket_hi == 200.0);
    CHECK_FALSE(r.bracket_expanded);

    // independent re-solve at the returned K
    const ConductanceResult check = effective_conductance(env, 1, r.k_tuned);
    CHECK(std::abs(check.sigma_sq - 1.0) <= tol);

    // tighter solver tolerance agrees within 10x the tuning tolerance
    SolveOptions fine;
    fine.residual_tol = 5e-13;
    const ConductanceResult finer = effective_conductance(env, 1, r.k_tuned, fine);
    CHECK(std::abs(finer.sigma_sq - check.sigma_sq) <= 10.0 * tol);

    // monotonicity probe around the tuned point
    const double lo = effective_conductance(env, 1, r.k_tuned / 2).sigma_sq;
    const double hi = effective_conductance(env, 1, r.k_tuned * 2).sigma_sq;
    CHECK(lo <= check.sigma_sq + 1e-9);
    CHECK(check.sigma_sq <= hi + 1e-9);

    // second call hits the cache with identical numbers
    const TuneResult again = tune_k(env, 1, tol);
    CHECK(again.cache_hit);
    CHECK(again.k_tuned == r.k_tuned);
    CHECK(again.sigma_sq_at_k == r.sigma_sq_at_k);
    CHECK(again.solves == r.solves);

    // bypassing the cache reproduces the same numbers deterministically
    const TuneResult fresh = tune_k(env, 1, tol, SolveOptions{}, false);
    CHECK_FALSE(fresh.cache_hit);
    CHECK(fresh.k_tuned == r.k_tuned);
}

TEST_CASE("tuning rejects bad tolerances") {
    const EnvironmentSpec env = fast1_env(7);
    CHECK_THROWS_AS(tune_k(env, 1, 0.0, SolveOptions{}, false), ConfigError);
    CHECK_THROWS_AS(tune_k(env, 1, -1e-3, SolveOptions{}, false), ConfigError);
}

TEST_CASE("duality certificate closes the gap") {
    const EnvironmentSpec env = fast1_env(8);
    const DualityCertificate uniform =
        duality_certificate(env, 1, std::make_optional(1.0), SolveOptions{});
    CHECK(uniform.max_principle_excess <= 1e-12);

    const DualityCertificate cert = duality_certificate(env, 1, 2.0);
    CHECK(cert.gap <= 1e-8);
    CHECK(cert.max_principle_excess <= 1e-9);
    CHECK(cert.sigma_sq * cert.flow_energy_normalized ==
          doctest::Approx(1.0).epsilon(1e-8));

    SolveOptions sloppy;
    sloppy.residual_tol = 1e-1;
    const DualityCertificate rough = duality_certificate(env, 1, 2.0, sloppy);
    CHECK(rough.gap > 1e-4);
}

TEST_CASE("maximum principle excess measures escape from [0,1]") {
    CHECK(maximum_principle_excess({0.0, 0.5, 1.0}) == 0.0);
    CHECK(maximum_principle_excess({0.0, 1.25, 0.5}) == doctest::Approx(0.25));
    CHECK(maximum_principle_excess({-0.5, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("pasted replica energy matches the coarse ramp") {
    // tiling the square with scaled ramp copies reproduces the ramp energy
    for (long a : {2L, 4L, 8L}) {
        WeightGrid w = WeightGrid::uniform(a);
        w.apply_border_halving();
        CHECK(grid_energy(w, linear_ramp(a)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("dirichlet_energy agrees with grid_energy on materialized weights") {
    const EnvironmentSpec env = fast1_env(9);
    const auto f = linear_ramp(128);
    const double via_env = dirichlet_energy(f, env, 1, 2.0);
    const WeightGrid w = materialize_weights(env, 1, 2.0);
    CHECK(via_env == doctest::Approx(grid_energy(w, f)).epsilon(1e-15));
}

TEST_CASE("fnv1a64 is the reference hash") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 12638187200555641996ULL);
}
