#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "condlab/environment.hpp"
#include "condlab/errors.hpp"
#include "condlab/rng.hpp"
#include "condlab/stats.hpp"
#include "condlab/walk.hpp"

using namespace condlab;

namespace {

EnvironmentSpec pinned_fast1() {
    EnvironmentSpec env;
    env.profile = Profile::desk;
    env.scales = preset_scales("fast1");
    env.offsets = {{0, 0}};
    env.seed = 0;
    return env;
}

} // namespace

TEST_CASE("uniform field rates") {
    const ConductanceField uniform;
    const JumpRates r = local_rates(uniform, {3, -7});
    CHECK(r.right == 1.0);
    CHECK(r.left == 1.0);
    CHECK(r.up == 1.0);
    CHECK(r.down == 1.0);
    CHECK(r.total == 4.0);
}

TEST_CASE("neighbor rates agree across the shared edge") {
    const EnvironmentSpec env = pinned_fast1();
    const ConductanceField field(env, 1, 3.0);
    CounterRng rng(8, StreamPurpose::generic, 0);
    for (int i = 0; i < 500; ++i) {
        const Coord p{static_cast<long>(rng.next_below(256)) - 64,
                      static_cast<long>(rng.next_below(256)) - 64};
        const JumpRates r = local_rates(field, p);
        CHECK(r.right == local_rates(field, {p.x + 1, p.y}).left);
        CHECK(r.up == local_rates(field, {p.x, p.y + 1}).down);
        CHECK(r.total == r.right + r.left + r.up + r.down);
    }
}

TEST_CASE("holding times are exponential with the local rate") {
    const ConductanceField uniform;
    std::vector<double> first_holds;
    first_holds.reserve(10000);
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const WalkPath p = simulate_path(uniform, {0, 0}, 50.0, 77, i);
        REQUIRE(p.events.size() >= 2);
        first_holds.push_back(p.events[1].t);
    }
    CHECK(ks_test_exponential_p(first_holds, 4.0) > 0.01);
    CHECK(ks_test_exponential_p(first_holds, 2.0) < 1e-6);
}

TEST_CASE("jump count over a window is a rate-4 Poisson") {
    const ConductanceField uniform;
    const double T = 2.0;
    RunningStats counts;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const WalkPath p = simulate_path(uniform, {0, 0}, T, 5150, i);
        counts.add(static_cast<double>(p.events.size() - 1));
    }
    CHECK(std::abs(counts.mean() - 4.0 * T) <= 3.0 * counts.stderr_mean());
    // Poisson variance equals the mean
    CHECK(counts.variance() == doctest::Approx(4.0 * T).epsilon(0.1));
}

TEST_CASE("jump frequencies follow the edge weights") {
    const EnvironmentSpec env = pinned_fast1();
    // site at the lower tip of a strong bar; eta flattened so the only
    // non-unit incident edge is the K edge below
    const double K = 3.0;
    const ConductanceField field(env, 1, K, 1.0);
    const Coord site{12, 104};
    const JumpRates r = local_rates(field, site);
    REQUIRE(r.right == 1.0);
    REQUIRE(r.left == 1.0);
    REQUIRE(r.up == 1.0);
    REQUIRE(r.down == K);

    WalkOptions first_jump_only;
    first_jump_only.max_events = 2;
    std::vector<long> counts(4, 0);
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const WalkPath p = simulate_path(field, site, 1e9, 31337, i, first_jump_only);
        REQUIRE(p.events.size() == 2);
        const Coord d = p.events[1].pos - site;
        if (d == Coord{1, 0})
            ++counts[0];
        else if (d == Coord{-1, 0})
            ++counts[1];
        else if (d == Coord{0, 1})
            ++counts[2];
        else
            ++counts[3];
    }
    const std::vector<double> probs{1.0 / (K + 3.0), 1.0 / (K + 3.0), 1.0 / (K + 3.0),
                                    K / (K + 3.0)};
    CHECK(chi2_test_p(counts, probs) > 0.01);
}

TEST_CASE("paths are reproducible and indexed independently") {
    const ConductanceField uniform;
    const WalkPath a = simulate_path(uniform, {2, 3}, 10.0, 99, 7);
    const WalkPath b = simulate_path(uniform, {2, 3}, 10.0, 99, 7);
    REQUIRE(a.events.size() == b.events.size());
    for (std::size_t i = 0; i < a.events.size(); ++i) {
        CHECK(a.events[i].t == b.events[i].t);
        CHECK(a.events[i].pos == b.events[i].pos);
    }
    const WalkPath c = simulate_path(uniform, {2, 3}, 10.0, 99, 8);
    CHECK(a.events[1].t != c.events[1].t);
}

TEST_CASE("event cap truncates and flags") {
    const ConductanceField uniform;
    WalkOptions opts;
    opts.max_events = 5;
    const WalkPath p = simulate_path(uniform, {0, 0}, 1000.0, 4, 0, opts);
    CHECK(p.truncated);
    CHECK(p.events.size() == 5);
    CHECK(p.horizon == p.events.back().t);
    CHECK(p.horizon < 1000.0);
    CHECK_THROWS_AS(simulate_path(uniform, {0, 0}, 0.0, 4, 0), ConfigError);
}

TEST_CASE("position lookup is right-continuous") {
    const ConductanceField uniform;
    const WalkPath p = simulate_path(uniform, {0, 0}, 5.0, 12, 0);
    REQUIRE(p.events.size() >= 3);
    CHECK(position_at(p, 0.0) == Coord{0, 0});
    CHECK(position_at(p, p.events[1].t) == p.events[1].pos);
    const double mid = 0.5 * (p.events[1].t + p.events[2].t);
    CHECK(position_at(p, mid) == p.events[1].pos);
    CHECK_THROWS_AS(position_at(p, -0.1), std::out_of_range);
    CHECK_THROWS_AS(position_at(p, 5.1), std::out_of_range);
}

TEST_CASE("rescaling by one is the identity") {
    const ConductanceField uniform;
    const WalkPath p = simulate_path(uniform, {1, -2}, 8.0, 6, 0);
    const ScaledPath s = rescale(p, 1.0);
    CHECK(s.horizon == 8.0);
    CHECK(s.eps == 1.0);
    REQUIRE(s.events.size() == p.events.size());
    for (std::size_t i = 0; i < s.events.size(); ++i) {
        CHECK(s.events[i].t == p.events[i].t);
        CHECK(s.events[i].x == static_cast<double>(p.events[i].pos.x));
        CHECK(s.events[i].y == static_cast<double>(p.events[i].pos.y));
    }
}

TEST_CASE("rescaling composes multiplicatively") {
    const ConductanceField uniform;
    const WalkPath p = simulate_path(uniform, {0, 0}, 64.0, 13, 2);
    const ScaledPath once = rescale(p, 0.125);
    const ScaledPath twice = rescale(rescale(p, 0.5), 0.25);
    CHECK(twice.eps == once.eps);
    CHECK(twice.horizon == once.horizon);
    REQUIRE(twice.events.size() == once.events.size());
    for (std::size_t i = 0; i < once.events.size(); ++i) {
        CHECK(twice.events[i].t == once.events[i].t);
        CHECK(twice.events[i].x == once.events[i].x);
        CHECK(twice.events[i].y == once.events[i].y);
    }
}

TEST_CASE("rescaled horizon is checked against the requirement") {
    const ConductanceField uniform;
    const long b = 4;
    const WalkPath enough = simulate_path(uniform, {0, 0}, static_cast<double>(b * b), 3, 0);
    CHECK_NOTHROW(rescale(enough, 1.0 / b, 1.0));
    const WalkPath short_run = simulate_path(uniform, {0, 0}, 15.9, 3, 0);
    CHECK_THROWS_AS(rescale(short_run, 1.0 / b, 1.0), HorizonTooShort);
    CHECK_THROWS_AS(rescale(enough, 0.0), ConfigError);
    CHECK_THROWS_AS(rescale(enough, -1.0), ConfigError);
}

TEST_CASE("mean square displacement of the rescaled walk") {
    const ConductanceField uniform;
    const double eps = 1.0 / 16.0;
    RunningStats msd;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const WalkPath p = simulate_path(uniform, {0, 0}, 256.0, 2024, i);
        msd.add(squared_displacement(rescale(p, eps), 1.0));
    }
    CHECK(std::abs(msd.mean() - 4.0) <= 3.0 * msd.stderr_mean());
}

TEST_CASE("squared displacement uses the start as origin") {
    ScaledPath path;
    path.eps = 1.0;
    path.horizon = 2.0;
    path.events = {{0.0, 1.0, 2.0}, {0.5, 3.0, 4.0}};
    CHECK(squared_displacement(path, 0.25) == 0.0);
    CHECK(squared_displacement(path, 0.7) == doctest::Approx(8.0));
    const ScaledPoint q = scaled_position_at(path, 0.5);
    CHECK(q.x == 3.0);
    CHECK(q.y == 4.0);
}

TEST_CASE("crossing event semantics") {
    auto mk = [](std::vector<ScaledPoint> ev, double horizon) {
        ScaledPath p;
        p.eps = 1.0;
        p.horizon = horizon;
        p.events = std::move(ev);
        return p;
    };
    // never moves: endpoint condition fails
    CHECK_FALSE(crossing_event(mk({{0.0, 0.0, 0.0}}, 2.0)));
    // jumps to 1.5 and stays
    CHECK(crossing_event(mk({{0.0, 0.0, 0.0}, {0.1, 1.5, 0.0}}, 1.2)));
    // marches straight past 2
    CHECK_FALSE(crossing_event(mk({{0.0, 0.0, 0.0},
                                   {0.1, 0.5, 0.0},
                                   {0.2, 1.0, 0.0},
                                   {0.3, 1.5, 0.0},
                                   {0.4, 2.5, 0.0}},
                                  2.0)));
    // touching 2 exactly is allowed
    CHECK(crossing_event(mk({{0.0, 0.0, 0.0}, {0.2, 2.0, 0.0}, {0.8, 1.5, 0.0}}, 1.0)));
    // the corridor in the second coordinate is open
    CHECK_FALSE(crossing_event(mk({{0.0, 0.0, 0.0}, {0.1, 1.5, 0.75}}, 2.0)));
    CHECK(crossing_event(mk({{0.0, 0.0, 0.0}, {0.1, 1.5, 0.7}}, 2.0)));
    // events after time 1 are ignored
    CHECK(crossing_event(mk({{0.0, 0.0, 0.0}, {0.3, 1.5, 0.0}, {1.5, 9.0, 0.0}}, 2.0)));
    // relative to a nonzero start
    CHECK(crossing_event(mk({{0.0, 5.0, 5.0}, {0.4, 6.5, 5.0}}, 1.0)));
    CHECK_THROWS_AS(crossing_event(mk({{0.0, 0.0, 0.0}}, 0.9)), HorizonTooShort);
}
