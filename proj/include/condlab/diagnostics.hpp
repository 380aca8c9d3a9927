#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "condlab/brownian.hpp"
#include "condlab/environment.hpp"
#include "condlab/functional.hpp"
#include "condlab/walk.hpp"

namespace condlab {

struct FunctionalEstimate {
    std::string functional_id;
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t paths = 0;
};

struct QuenchedRun {
    std::uint64_t env_seed = 0;
    std::vector<FunctionalEstimate> estimates;
};

struct AnnealedReport {
    std::vector<QuenchedRun> per_env;
    std::vector<FunctionalEstimate> pooled; // path-count weighted over environments
    std::vector<double> across_env_variance;
    double eps = 0.0;
};

// Draws n_envs environments (seeds from one dedicated stream of `seed`),
// runs paths_per_env walks from the origin in each, and evaluates every
// functional on the rescaled paths. The pooled mean is by construction
// the path-count weighted mean of the per-environment means.
AnnealedReport annealed_estimate(const EnvironmentSpec& base, int level, double eps,
                                 const std::vector<FunctionalSpec>& fns,
                                 std::size_t n_envs, std::size_t paths_per_env,
                                 std::uint64_t seed, int threads = 1,
                                 std::optional<double> eta_override = std::nullopt);

// Statistic measured per path: either a functional value or the corridor
// crossing indicator.
struct PathStatistic {
    enum class Kind { functional, crossing } kind = Kind::crossing;
    FunctionalSpec functional; // used when kind == functional

    double horizon() const {
        return kind == Kind::crossing ? 1.0 : functional.horizon();
    }
};

// The distinguished site whose box neighborhood the offset can pull onto
// the origin.
Coord blocking_site(const LevelScale& s);

// Searches environment seeds by rejection until the origin is inside
// (trapped) or far from (no special edge within 3b) the obstacle layout.
std::uint64_t find_env_seed(const EnvironmentSpec& base, int level, bool trapped,
                            std::uint64_t scan_seed, std::size_t max_tries = 1u << 21);

struct SpreadRun {
    std::uint64_t env_seed = 0;
    std::string label; // "trapped" or "far"
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t paths = 0;
};

struct SpreadReport {
    std::vector<SpreadRun> runs;
    double separation = 0.0; // max over run pairs of |dm| / sqrt(se^2 + se^2)
};

struct SpreadOptions {
    int level = 1;
    double eps = 0.0;
    PathStatistic statistic;
    std::size_t paths = 0;
    std::size_t n_trapped = 1;
    std::size_t n_far = 1;
    std::optional<double> eta_override;
    std::uint64_t seed = 0;
    int threads = 1;
};

// Same statistic, same path budget, different environment draws chosen so
// the origin is trapped in some and clear in others.
SpreadReport quenched_spread(const EnvironmentSpec& base, const SpreadOptions& opts);

double separation_between(double m1, double se1, double m2, double se2);

struct HittingReport {
    double exact = 0.0;
    double mc = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    long box_radius = 0;
};

// Probability that the origin lands in the sup-ball of radius lambda*b_n
// around the blocking site, over the level-n offset conditioned on the
// lower levels. Exact enumeration next to a Monte Carlo check.
HittingReport hitting_probability(const EnvironmentSpec& base, int level, double lambda,
                                  std::size_t samples, std::uint64_t seed);

struct BlockingReport {
    double p_hat = 0.0;
    double std_error = 0.0;
    std::size_t paths = 0;
    Coord start{0, 0};
    double eps = 0.0;
    double eta = 0.0;
};

// Corridor crossing frequency for walks started right at the blocking
// site (shifted with the offset), at scale eps = 1/b.
BlockingReport obstacle_blocking_experiment(const EnvironmentSpec& env,
                                            std::size_t paths, double eta_override,
                                            int threads = 1);

struct DiscrepancyRow {
    std::string functional_id;
    double walk_mean = 0.0;
    double walk_std_error = 0.0;
    double bm_value = 0.0;
    double abs_diff = 0.0;
    double sigma = 0.0; // abs_diff in walk standard errors, 0/0 -> 0
};

struct DiscrepancyReport {
    std::vector<DiscrepancyRow> rows;
    double max_abs_diff = 0.0;
    double max_sigma = 0.0;
};

// Pairs pooled walk estimates with the limit-process references.
DiscrepancyReport functional_discrepancy(const std::vector<FunctionalEstimate>& pooled,
                                         const std::vector<FunctionalSpec>& fns,
                                         int nodes_per_panel = 40);

} // namespace condlab
