#include "condlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "condlab/errors.hpp"
#include "condlab/parallel.hpp"
#include "condlab/stats.hpp"

namespace condlab {

namespace {

void require_tuned(const EnvironmentSpec& env, int level) {
    for (int n = 1; n <= level; ++n)
        if (!env.scales[static_cast<std::size_t>(n) - 1].k_tuned)
            throw MissingTunedK("level " + std::to_string(n) +
                                " has no tuned strong-edge weight");
}

std::size_t chunk_count(std::size_t total) { return work_chunk_count(total); }

} // namespace

AnnealedReport annealed_estimate(const EnvironmentSpec& base, int level, double eps,
                                 const std::vector<FunctionalSpec>& fns,
                                 std::size_t n_envs, std::size_t paths_per_env,
                                 std::uint64_t seed, int threads,
                                 std::optional<double> eta_override) {
    if (fns.empty()) throw ConfigError("need at least one functional");
    if (n_envs == 0 || paths_per_env == 0)
        throw ConfigError("need at least one environment and one path");
    if (!(eps > 0.0)) throw ConfigError("scale parameter must be positive");
    for (const FunctionalSpec& f : fns) validate_functional(f);
    require_tuned(base, level);

    double horizon = 0.0;
    for (const FunctionalSpec& f : fns) horizon = std::max(horizon, f.horizon());
    const double raw_horizon = horizon / (eps * eps);

    CounterRng env_seeds(seed, StreamPurpose::offsets, 0xE);
    AnnealedReport report;
    report.eps = eps;
    std::vector<RunningStats> pooled(fns.size());
    std::vector<std::vector<double>> env_means(fns.size());

    for (std::size_t e = 0; e < n_envs; ++e) {
        const std::uint64_t env_seed = env_seeds.next_u64();
        EnvironmentSpec env = base;
        env.seed = env_seed;
        env.offsets = sample_offsets(env.scales, env_seed);
        const ConductanceField field(env, level, std::nullopt, eta_override);

        std::vector<std::vector<RunningStats>> per_chunk(
            chunk_count(paths_per_env), std::vector<RunningStats>(fns.size()));
        run_indexed(paths_per_env, threads, [&](std::size_t chunk, std::size_t p) {
            const WalkPath raw =
                simulate_path(field, Coord{0, 0}, raw_horizon, env_seed, p);
            const ScaledPath path = rescale(raw, eps, horizon);
            for (std::size_t i = 0; i < fns.size(); ++i)
                per_chunk[chunk][i].add(evaluate_functional(fns[i], path));
        });

        std::vector<RunningStats> env_stats(fns.size());
        for (const auto& chunk : per_chunk)
            for (std::size_t i = 0; i < fns.size(); ++i) env_stats[i].merge(chunk[i]);

        QuenchedRun run;
        run.env_seed = env_seed;
        for (std::size_t i = 0; i < fns.size(); ++i) {
            run.estimates.push_back({fns[i].id, env_stats[i].mean(),
                                     env_stats[i].stderr_mean(), env_stats[i].count()});
            pooled[i].merge(env_stats[i]);
            env_means[i].push_back(env_stats[i].mean());
        }
        report.per_env.push_back(std::move(run));
    }

    for (std::size_t i = 0; i < fns.size(); ++i) {
        // pooled mean restated as the explicit weighted mean of the
        // per-environment means, which is the identity the reports promise
        CompensatedSum weighted;
        std::size_t total_paths = 0;
        for (const QuenchedRun& run : report.per_env) {
            weighted.add(static_cast<double>(run.estimates[i].paths) *
                         run.estimates[i].mean);
            total_paths += run.estimates[i].paths;
        }
        FunctionalEstimate est;
        est.functional_id = fns[i].id;
        est.mean = weighted.value() / static_cast<double>(total_paths);
        est.std_error = pooled[i].stderr_mean();
        est.paths = pooled[i].count();
        report.pooled.push_back(est);

        RunningStats across;
        for (double m : env_means[i]) across.add(m);
        report.across_env_variance.push_back(n_envs > 1 ? across.variance() : 0.0);
    }
    return report;
}

Coord blocking_site(const LevelScale& s) {
    const long ah = s.a / 2;
    const Coord w{ah - 10 * s.b - 1, ah - s.beta};
    return Coord{w.x - s.b / 2, w.y};
}

namespace {

long periodic_abs(long d, long period) {
    const long m = floor_mod(d, period);
    return std::min(m, period - m);
}

bool origin_trapped(const EnvironmentSpec& env, int level, long radius) {
    const LevelScale& s = env.scales[static_cast<std::size_t>(level) - 1];
    const Coord z = blocking_site(s);
    const Coord o = env.offsets[static_cast<std::size_t>(level) - 1];
    return periodic_abs(z.x + o.x, s.a) <= radius && periodic_abs(z.y + o.y, s.a) <= radius;
}

bool origin_far(const EnvironmentSpec& env, int level, long radius) {
    const LevelScale& s = env.scales[static_cast<std::size_t>(level) - 1];
    const Coord o = env.offsets[static_cast<std::size_t>(level) - 1];
    for (long dy = -radius; dy <= radius; ++dy)
        for (long dx = -radius; dx <= radius; ++dx) {
            const long rx = floor_mod(dx - o.x, s.a);
            const long ry = floor_mod(dy - o.y, s.a);
            if (classify_edge(s, EdgeDir::horizontal, rx, ry)) return false;
            if (classify_edge(s, EdgeDir::vertical, rx, ry)) return false;
        }
    return true;
}

} // namespace

std::uint64_t find_env_seed(const EnvironmentSpec& base, int level, bool trapped,
                            std::uint64_t scan_seed, std::size_t max_tries) {
    const LevelScale& s = base.scales[static_cast<std::size_t>(level) - 1];
    CounterRng candidates(scan_seed, StreamPurpose::shuffle, trapped ? 1 : 2);
    for (std::size_t i = 0; i < max_tries; ++i) {
        const std::uint64_t cand = candidates.next_u64();
        EnvironmentSpec env = base;
        env.seed = cand;
        env.offsets = sample_offsets(env.scales, cand);
        if (trapped ? origin_trapped(env, level, s.b / 8)
                    : origin_far(env, level, 3 * s.b))
            return cand;
    }
    throw BracketFailure("seed scan exhausted without a matching environment");
}

double separation_between(double m1, double se1, double m2, double se2) {
    const double num = std::abs(m1 - m2);
    const double den = std::sqrt(se1 * se1 + se2 * se2);
    if (num == 0.0) return 0.0;
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
}

namespace {

RunningStats measure_statistic(const ConductanceField& field, const Coord& start,
                               const PathStatistic& stat, double eps,
                               std::size_t paths, std::uint64_t path_seed,
                               int threads) {
    const double horizon = stat.horizon();
    const double raw_horizon = horizon / (eps * eps);
    std::vector<RunningStats> per_chunk(chunk_count(paths));
    run_indexed(paths, threads, [&](std::size_t chunk, std::size_t p) {
        const WalkPath raw = simulate_path(field, start, raw_horizon, path_seed, p);
        const ScaledPath path = rescale(raw, eps, horizon);
        if (stat.kind == PathStatistic::Kind::crossing)
            per_chunk[chunk].add(crossing_event(path) ? 1.0 : 0.0);
        else
            per_chunk[chunk].add(evaluate_functional(stat.functional, path));
    });
    RunningStats out;
    for (const RunningStats& s : per_chunk) out.merge(s);
    return out;
}

} // namespace

SpreadReport quenched_spread(const EnvironmentSpec& base, const SpreadOptions& opts) {
    if (opts.n_trapped + opts.n_far < 2)
        throw ConfigError("spread needs at least two environments");
    if (opts.paths == 0) throw ConfigError("need at least one path");
    if (!(opts.eps > 0.0)) throw ConfigError("scale parameter must be positive");
    if (opts.statistic.kind == PathStatistic::Kind::functional)
        validate_functional(opts.statistic.functional);
    require_tuned(base, opts.level);

    SpreadReport report;
    std::vector<std::pair<std::string, std::uint64_t>> picks;
    for (std::size_t i = 0; i < opts.n_trapped; ++i)
        picks.emplace_back("trapped",
                           find_env_seed(base, opts.level, true, opts.seed + i));
    for (std::size_t i = 0; i < opts.n_far; ++i)
        picks.emplace_back("far", find_env_seed(base, opts.level, false, opts.seed + i));

    for (const auto& [label, env_seed] : picks) {
        EnvironmentSpec env = base;
        env.seed = env_seed;
        env.offsets = sample_offsets(env.scales, env_seed);
        const ConductanceField field(env, opts.level, std::nullopt, opts.eta_override);
        const RunningStats stats =
            measure_statistic(field, Coord{0, 0}, opts.statistic, opts.eps, opts.paths,
                              env_seed, opts.threads);
        report.runs.push_back(
            {env_seed, label, stats.mean(), stats.stderr_mean(), stats.count()});
    }

    for (std::size_t i = 0; i < report.runs.size(); ++i)
        for (std::size_t j = i + 1; j < report.runs.size(); ++j)
            report.separation = std::max(
                report.separation,
                separation_between(report.runs[i].mean, report.runs[i].std_error,
                                   report.runs[j].mean, report.runs[j].std_error));
    return report;
}

HittingReport hitting_probability(const EnvironmentSpec& base, int level, double lambda,
                                  std::size_t samples, std::uint64_t seed) {
    if (level < 1 || static_cast<std::size_t>(level) > base.scales.size())
        throw ConfigError("level out of range for this environment");
    if (samples == 0) throw ConfigError("need at least one sample");
    const LevelScale& s = base.scales[static_cast<std::size_t>(level) - 1];
    const long radius = static_cast<long>(std::floor(lambda * static_cast<double>(s.b)));
    if (radius < 1) throw ConfigError("box radius below one site; increase lambda");

    const Coord z = blocking_site(s);
    const long step = prev_a(base.scales, level);
    const long m = scale_m(base.scales, level);
    Coord lower{0, 0};
    if (level > 1) lower = base.offsets[static_cast<std::size_t>(level) - 2];

    auto inside = [&](long u, long v) {
        const long x = z.x + lower.x + step * u;
        const long y = z.y + lower.y + step * v;
        return periodic_abs(x, s.a) <= radius && periodic_abs(y, s.a) <= radius;
    };

    HittingReport report;
    report.box_radius = radius;
    report.samples = samples;
    long count = 0;
    for (long v = 0; v < m; ++v)
        for (long u = 0; u < m; ++u)
            if (inside(u, v)) ++count;
    report.exact = static_cast<double>(count) / (static_cast<double>(m) * static_cast<double>(m));

    CounterRng rng(seed, StreamPurpose::generic, static_cast<std::uint64_t>(level));
    long hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const long u = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m)));
        const long v = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m)));
        if (inside(u, v)) ++hits;
    }
    report.mc = static_cast<double>(hits) / static_cast<double>(samples);
    report.std_error = std::sqrt(std::max(0.0, report.mc * (1.0 - report.mc)) /
                                 static_cast<double>(samples));
    return report;
}

BlockingReport obstacle_blocking_experiment(const EnvironmentSpec& env,
                                            std::size_t paths, double eta_override,
                                            int threads) {
    if (paths == 0) throw ConfigError("need at least one path");
    require_tuned(env, 1);
    const LevelScale& s = env.scales[0];
    const Coord start = blocking_site(s) + env.offsets[0];
    const double eps = 1.0 / static_cast<double>(s.b);
    const ConductanceField field(env, 1, std::nullopt, eta_override);

    PathStatistic stat;
    stat.kind = PathStatistic::Kind::crossing;
    const RunningStats stats =
        measure_statistic(field, start, stat, eps, paths, env.seed, threads);

    BlockingReport report;
    report.p_hat = stats.mean();
    report.std_error = stats.stderr_mean();
    report.paths = stats.count();
    report.start = start;
    report.eps = eps;
    report.eta = eta_override;
    return report;
}

DiscrepancyReport functional_discrepancy(const std::vector<FunctionalEstimate>& pooled,
                                         const std::vector<FunctionalSpec>& fns,
                                         int nodes_per_panel) {
    if (pooled.size() != fns.size())
        throw ConfigError("one pooled estimate per functional required");
    DiscrepancyReport report;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        const BmEstimate ref = bm_reference(fns[i], nodes_per_panel);
        DiscrepancyRow row;
        row.functional_id = fns[i].id;
        row.walk_mean = pooled[i].mean;
        row.walk_std_error = pooled[i].std_error;
        row.bm_value = ref.value;
        row.abs_diff = std::abs(row.walk_mean - row.bm_value);
        row.sigma = row.abs_diff == 0.0
                        ? 0.0
                        : (row.walk_std_error == 0.0
                               ? std::numeric_limits<double>::infinity()
                               : row.abs_diff / row.walk_std_error);
        report.max_abs_diff = std::max(report.max_abs_diff, row.abs_diff);
        report.max_sigma = std::max(report.max_sigma, row.sigma);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace condlab
