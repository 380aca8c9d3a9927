#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "condlab/environment.hpp"
#include "condlab/solver.hpp"

namespace condlab {

// Edge weights of the level-`level` square with the offsets pinned to the
// origin, so the obstacle layout is deterministic given the ladder. With
// border_halving the boundary-parallel edges count half, which makes the
// uniform field measure exactly 1.
WeightGrid materialize_weights(const EnvironmentSpec& env, int level,
                               std::optional<double> k_override = std::nullopt,
                               std::optional<double> eta_override = std::nullopt,
                               bool border_halving = true,
                               bool pin_offsets = true);

// Energy sum w * (df)^2 of an arbitrary potential on those weights.
double dirichlet_energy(const std::vector<double>& f, const EnvironmentSpec& env,
                        int level, std::optional<double> k_override = std::nullopt,
                        bool border_halving = true);

struct ConductanceResult {
    double sigma_sq = 0.0;
    SolveStats stats;
    std::vector<double> potential;
};

// Solves the bottom-0 / top-1 Dirichlet problem and reports the energy of
// the minimizer. `warm` seeds the iteration when it has the right size.
ConductanceResult effective_conductance(const WeightGrid& w,
                                        const SolveOptions& opts = {},
                                        const std::vector<double>* warm = nullptr);
ConductanceResult effective_conductance(const EnvironmentSpec& env, int level,
                                        std::optional<double> k_override = std::nullopt,
                                        const SolveOptions& opts = {},
                                        const std::vector<double>* warm = nullptr);

struct TuneResult {
    double k_tuned = 0.0;
    double sigma_sq_at_k = 0.0;
    int solves = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    bool bracket_expanded = false;
    bool cache_hit = false;
};

// Directory for tuning results: $CONDLAB_CACHE if set, else .condlab-cache.
std::string default_cache_dir();

// Finds K with |sigma_sq(K) - 1| <= tol by bisection on [0, 50 b], doubling
// the upper end at most 20 times if needed. Requires sigma_sq(0) < 1 and
// throws BracketFailure otherwise. Results are cached on disk keyed by the
// ladder shape, level and tolerances.
TuneResult tune_k(const EnvironmentSpec& env, int level, double tol = 1e-6,
                  const SolveOptions& opts = {}, bool use_cache = true);

struct DualityCertificate {
    double sigma_sq = 0.0;
    double flow_energy_normalized = 0.0; // energy of the unit-flux gradient flow
    double gap = 0.0;                    // |sigma_sq * energy - 1|
    double max_principle_excess = 0.0;   // how far the potential leaves [0, 1]
    SolveStats stats;
};

// Certifies a solve by pairing the potential's energy with the energy of
// its own normalized current flow. Both sides use the same weights, so the
// gap measures nothing but solver error.
DualityCertificate duality_certificate(const EnvironmentSpec& env, int level,
                                       std::optional<double> k_override = std::nullopt,
                                       const SolveOptions& opts = {});

// How far the potential escapes [0, 1]; exact solutions give 0.
double maximum_principle_excess(const std::vector<double>& f);

std::uint64_t fnv1a64(std::string_view s);

} // namespace condlab
