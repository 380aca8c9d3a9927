#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "condlab/errors.hpp"
#include "condlab/functional.hpp"
#include "condlab/rng.hpp"

using namespace condlab;

TEST_CASE("bump profile shape") {
    CHECK(bump_profile(0.0) == 1.0);
    CHECK(bump_profile(1.0) == 0.0);
    CHECK(bump_profile(-1.0) == 0.0);
    CHECK(bump_profile(2.7) == 0.0);
    CHECK(bump_profile(0.5) == doctest::Approx(0.5));
    for (double u = -0.95; u < 1.0; u += 0.05) {
        CHECK(bump_profile(u) == doctest::Approx(bump_profile(-u)));
        CHECK(bump_profile(u) >= 0.0);
        CHECK(bump_profile(u) <= 1.0);
    }
}

TEST_CASE("bump profile slope stays within 3/2") {
    const double h = 1e-6;
    for (double u = -0.999; u < 1.0; u += 0.001) {
        const double slope = (bump_profile(u + h) - bump_profile(u - h)) / (2.0 * h);
        CHECK(std::abs(slope) <= 1.5 + 1e-6);
    }
}

TEST_CASE("bump evaluation is separable") {
    const Bump b{0.0, 0.0, 2.0, 1.0};
    CHECK(bump_eval(b, 0.0, 0.0) == 1.0);
    CHECK(bump_eval(b, 1.0, 0.0) == doctest::Approx(0.5));
    CHECK(bump_eval(b, 1.0, 1.0) == doctest::Approx(0.25));
    CHECK(bump_eval(b, 2.0, 0.0) == 0.0);
    CHECK(bump_eval(b, 0.0, -5.0) == 0.0);

    const Bump shifted{1.0, -1.0, 1.0, 2.0};
    CHECK(bump_eval(shifted, 1.0, -1.0) == 2.0);
    CHECK(bump_eval(shifted, 2.0, -1.0) == 0.0);

    const Bump constant{9.0, 9.0, 0.0, 0.7};
    CHECK(bump_eval(constant, 123.0, -456.0) == 0.7);
}

TEST_CASE("functional validation") {
    FunctionalSpec ok{"ok", {0.5, 1.0}, {{0, 0, 1, 1}, {0, 0, 1, 1}}};
    CHECK_NOTHROW(validate_functional(ok));

    CHECK_THROWS_AS(validate_functional({"empty", {}, {}}), ConfigError);
    CHECK_THROWS_AS(validate_functional({"mismatch", {0.5}, {}}), ConfigError);
    CHECK_THROWS_AS(validate_functional({"zero-time", {0.0}, {{0, 0, 1, 1}}}), ConfigError);
    CHECK_THROWS_AS(
        validate_functional({"unsorted", {0.5, 0.25}, {{0, 0, 1, 1}, {0, 0, 1, 1}}}),
        ConfigError);
    CHECK_THROWS_AS(
        validate_functional({"tie", {0.5, 0.5}, {{0, 0, 1, 1}, {0, 0, 1, 1}}}),
        ConfigError);
    CHECK_THROWS_AS(validate_functional({"neg-r", {0.5}, {{0, 0, -1, 1}}}), ConfigError);
    CHECK_THROWS_AS(validate_functional({"nan-h", {0.5}, {{0, 0, 1, std::nan("")}}}),
                    ConfigError);
}

namespace {

ScaledPath path_from(std::vector<ScaledPoint> ev, double horizon) {
    ScaledPath p;
    p.eps = 1.0;
    p.horizon = horizon;
    p.events = std::move(ev);
    return p;
}

} // namespace

TEST_CASE("functional evaluation on paths") {
    const FunctionalSpec center{"c", {1.0}, {{0.0, 0.0, 2.0, 1.0}}};

    // path that never moves scores the bump peak
    CHECK(evaluate_functional(center, path_from({{0.0, 0.0, 0.0}}, 1.5)) == 1.0);
    // positions are read relative to the start
    CHECK(evaluate_functional(center, path_from({{0.0, 40.0, -7.0}}, 1.5)) == 1.0);
    // outside the support the product dies
    CHECK(evaluate_functional(center,
                              path_from({{0.0, 0.0, 0.0}, {0.2, 5.0, 0.0}}, 1.5)) == 0.0);
    // right-continuous sampling at a jump time
    CHECK(evaluate_functional(center,
                              path_from({{0.0, 0.0, 0.0}, {1.0, 1.0, 0.0}}, 1.5)) ==
          doctest::Approx(0.5));

    const FunctionalSpec pair{"p", {0.25, 0.75}, {{0.0, 0.0, 2.0, 1.0}, {1.0, 0.0, 2.0, 0.5}}};
    const ScaledPath path =
        path_from({{0.0, 0.0, 0.0}, {0.5, 1.0, 0.0}}, 1.0);
    // t=0.25 at (0,0): 1.0; t=0.75 at (1,0): 0.5 * s(0)^2 = 0.5
    CHECK(evaluate_functional(pair, path) == doctest::Approx(0.5));
}

TEST_CASE("evaluate_at_points matches manual products") {
    const FunctionalSpec pair{"p", {0.25, 0.75}, {{0.0, 0.0, 2.0, 1.0}, {1.0, 0.0, 2.0, 0.5}}};
    CHECK(evaluate_at_points(pair, {{0.0, 0.0}, {1.0, 0.0}}) == doctest::Approx(0.5));
    CHECK(evaluate_at_points(pair, {{2.0, 0.0}, {1.0, 0.0}}) == 0.0);
    CHECK_THROWS_AS(evaluate_at_points(pair, {{0.0, 0.0}}), ConfigError);
}

TEST_CASE("products obey the Lipschitz envelope") {
    CounterRng rng(2718, StreamPurpose::generic, 0);
    for (const FunctionalSpec& spec : library_v1()) {
        double c = 0.0;
        for (const Bump& b : spec.bumps) {
            c = std::max(c, std::abs(b.h));
            if (b.r > 0.0) c = std::max(c, 1.5 * std::sqrt(2.0) * std::abs(b.h) / b.r);
        }
        const double m = static_cast<double>(spec.times.size());
        const double envelope = m * std::pow(c, m);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::pair<double, double>> pts, moved;
            double d = 0.0;
            for (std::size_t i = 0; i < spec.times.size(); ++i) {
                const double x = rng.next_double() * 6.0 - 3.0;
                const double y = rng.next_double() * 6.0 - 3.0;
                const double dx = (rng.next_double() - 0.5) * 0.4;
                const double dy = (rng.next_double() - 0.5) * 0.4;
                pts.push_back({x, y});
                moved.push_back({x + dx, y + dy});
                d = std::max(d, std::hypot(dx, dy));
            }
            const double gap =
                std::abs(evaluate_at_points(spec, pts) - evaluate_at_points(spec, moved));
            CHECK(gap <= envelope * d + 1e-12);
        }
    }
}

TEST_CASE("library is the fixed batch of eight") {
    const auto lib = library_v1();
    REQUIRE(lib.size() == 8);
    std::set<std::string> ids;
    for (const FunctionalSpec& f : lib) {
        CHECK_NOTHROW(validate_functional(f));
        ids.insert(f.id);
        CHECK(f.horizon() <= 1.0);
        CHECK(f.times.front() >= 0.25);
        for (const Bump& b : f.bumps) {
            CHECK((b.r == 0.0 || b.r >= 1.2));
            CHECK(b.h > 0.0);
            CHECK(b.h <= 1.0);
        }
    }
    CHECK(ids.size() == 8);
    CHECK(lib.front().id == "f1-center");
    CHECK(lib.front().times == std::vector<double>{1.0});
    CHECK(lib.front().bumps.front().r == 2.0);
}

TEST_CASE("functional JSON round-trips") {
    const auto lib = library_v1();
    const auto back = functionals_from_json(functionals_to_json(lib));
    REQUIRE(back.size() == lib.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
        CHECK(back[i].id == lib[i].id);
        CHECK(back[i].times == lib[i].times);
        REQUIRE(back[i].bumps.size() == lib[i].bumps.size());
        for (std::size_t j = 0; j < lib[i].bumps.size(); ++j) {
            CHECK(back[i].bumps[j].cx == lib[i].bumps[j].cx);
            CHECK(back[i].bumps[j].cy == lib[i].bumps[j].cy);
            CHECK(back[i].bumps[j].r == lib[i].bumps[j].r);
            CHECK(back[i].bumps[j].h == lib[i].bumps[j].h);
        }
    }
}

TEST_CASE("functional JSON rejects malformed input") {
    CHECK_THROWS_AS(functionals_from_json("nonsense"), ConfigError);
    CHECK_THROWS_AS(functionals_from_json("{}"), ConfigError);
    CHECK_THROWS_AS(functionals_from_json("[]"), ConfigError);
    CHECK_THROWS_AS(functionals_from_json(R"([{"id":"x"}])"), ConfigError);
    CHECK_THROWS_AS(functionals_from_json(
                        R"([{"id":"x","times":[0],"bumps":[{"cx":0,"cy":0,"r":1,"h":1}]}])"),
                    ConfigError);
    CHECK_THROWS_AS(load_functionals("/nonexistent/path/f.json"), IoError);
}
