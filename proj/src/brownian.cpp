#include "condlab/brownian.hpp"

#include <cmath>
#include <vector>

#include "condlab/errors.hpp"
#include "condlab/quadrature.hpp"
#include "condlab/rng.hpp"
#include "condlab/stats.hpp"

namespace condlab {

namespace {

double heat_kernel(double d, double v) {
    const double two_pi = 6.283185307179586476925286766559;
    return std::exp(-d * d / (2.0 * v)) / std::sqrt(two_pi * v);
}

struct AxisFactor {
    double t = 0.0;
    double c = 0.0;
    double r = 0.0;
};

// E prod_j s((B_{t_j} - c_j)/r_j) for one coordinate, B of variance 2t.
// Backward recursion over Gauss-Legendre node grids on the bump supports,
// each split at the center where the profile loses smoothness.
double axis_expectation(const std::vector<AxisFactor>& factors, int nodes_per_panel) {
    if (factors.empty()) return 1.0;
    const QuadRule base = gauss_legendre(nodes_per_panel);
    const std::size_t k = factors.size();

    std::vector<QuadRule> grids(k);
    for (std::size_t i = 0; i < k; ++i) {
        const QuadRule left = scale_rule(base, factors[i].c - factors[i].r, factors[i].c);
        const QuadRule right = scale_rule(base, factors[i].c, factors[i].c + factors[i].r);
        grids[i].x = left.x;
        grids[i].x.insert(grids[i].x.end(), right.x.begin(), right.x.end());
        grids[i].w = left.w;
        grids[i].w.insert(grids[i].w.end(), right.w.begin(), right.w.end());
    }

    auto profile_at = [](const AxisFactor& f, double x) {
        return bump_profile((x - f.c) / f.r);
    };

    std::vector<double> h(grids[k - 1].x.size());
    for (std::size_t q = 0; q < h.size(); ++q)
        h[q] = profile_at(factors[k - 1], grids[k - 1].x[q]);

    for (std::size_t i = k - 1; i-- > 0;) {
        const double v = 2.0 * (factors[i + 1].t - factors[i].t);
        std::vector<double> next(grids[i].x.size(), 0.0);
        for (std::size_t p = 0; p < grids[i].x.size(); ++p) {
            CompensatedSum acc;
            for (std::size_t q = 0; q < grids[i + 1].x.size(); ++q)
                acc.add(heat_kernel(grids[i + 1].x[q] - grids[i].x[p], v) *
                        grids[i + 1].w[q] * h[q]);
            next[p] = profile_at(factors[i], grids[i].x[p]) * acc.value();
        }
        h = std::move(next);
    }

    CompensatedSum total;
    for (std::size_t q = 0; q < grids[0].x.size(); ++q)
        total.add(heat_kernel(grids[0].x[q], 2.0 * factors[0].t) * grids[0].w[q] * h[q]);
    return total.value();
}

} // namespace

BmEstimate bm_reference(const FunctionalSpec& spec, int nodes_per_panel,
                        std::size_t mc_paths, std::uint64_t mc_seed) {
    validate_functional(spec);
    if (spec.times.size() > 4) return bm_mc_reference(spec, mc_paths, mc_seed);

    double heights = 1.0;
    std::vector<AxisFactor> fx, fy;
    for (std::size_t i = 0; i < spec.times.size(); ++i) {
        const Bump& b = spec.bumps[i];
        heights *= b.h;
        if (b.r > 0.0) {
            fx.push_back({spec.times[i], b.cx, b.r});
            fy.push_back({spec.times[i], b.cy, b.r});
        }
    }
    BmEstimate out;
    out.method = "quadrature";
    if (heights == 0.0) return out;
    out.value = heights * axis_expectation(fx, nodes_per_panel) *
                axis_expectation(fy, nodes_per_panel);
    return out;
}

BmEstimate bm_mc_reference(const FunctionalSpec& spec, std::size_t paths,
                           std::uint64_t seed) {
    validate_functional(spec);
    RunningStats stats;
    const std::size_t m = spec.times.size();
    std::vector<std::pair<double, double>> pts(m);
    for (std::size_t p = 0; p < paths; ++p) {
        CounterRng rng(seed, StreamPurpose::brownian, p);
        double x = 0.0, y = 0.0, t = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double sd = std::sqrt(2.0 * (spec.times[i] - t));
            x += sd * rng.next_normal();
            y += sd * rng.next_normal();
            t = spec.times[i];
            pts[i] = {x, y};
        }
        stats.add(evaluate_at_points(spec, pts));
    }
    BmEstimate out;
    out.method = "monte-carlo";
    out.value = stats.mean();
    out.std_error = stats.stderr_mean();
    return out;
}

CrossingEstimate bm_crossing_mc(std::size_t paths, std::uint64_t seed, double dt,
                                int direction) {
    if (!(dt > 0.0 && dt < 1.0)) throw ConfigError("step size must lie in (0,1)");
    if (direction != 1 && direction != -1)
        throw ConfigError("crossing direction must be +1 or -1");
    const std::size_t steps = static_cast<std::size_t>(std::llround(1.0 / dt));
    const double band = 0.75;
    const double sd = std::sqrt(2.0 * dt);
    RunningStats stats;
    for (std::size_t p = 0; p < paths; ++p) {
        CounterRng rng(seed, StreamPurpose::brownian, p);
        double x = 0.0, y = 0.0;
        double weight = 1.0;
        bool alive = true;
        for (std::size_t s = 0; s < steps && alive; ++s) {
            const double xn = x + sd * rng.next_normal();
            const double yn = y + sd * rng.next_normal();
            if (std::abs(yn) >= band || std::abs(xn) > 2.0) {
                alive = false;
                break;
            }
            // survival of the bridge against both band edges
            const double pu = std::exp(-2.0 * (band - y) * (band - yn) / (2.0 * dt));
            const double pl = std::exp(-2.0 * (band + y) * (band + yn) / (2.0 * dt));
            weight *= (1.0 - pu) * (1.0 - pl);
            x = xn;
            y = yn;
        }
        const bool crossed = alive && direction * x > 1.0;
        stats.add(crossed ? weight : 0.0);
    }
    CrossingEstimate out;
    out.value = stats.mean();
    out.std_error = stats.stderr_mean();
    out.paths = paths;
    return out;
}

} // namespace condlab
