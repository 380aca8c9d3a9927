#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "condlab/lattice.hpp"
#include "condlab/scales.hpp"

namespace condlab {

// Validated scale ladder + sampled offsets + seed: fully determines the
// conductance field.
struct EnvironmentSpec {
    Profile profile = Profile::desk;
    std::vector<LevelScale> scales;
    std::vector<Coord> offsets;
    std::uint64_t seed = 0;
};

// Offset chain: level 1 uniform on [0,a_1-1]^2, level n uniform over the
// m_n^2 points congruent to the previous offset mod a_{n-1}.
std::vector<Coord> sample_offsets(const std::vector<LevelScale>& scales, std::uint64_t seed);

// Validates under the given profile (throws ValidationFailure on violations),
// then samples offsets.
EnvironmentSpec make_environment(std::vector<LevelScale> scales, std::uint64_t seed,
                                 Profile profile = Profile::desk);

// Named parameter ladders used by the CLI and the test suite.
std::vector<LevelScale> preset_scales(const std::string& name);

enum class EdgeClass { high, low };

// Classed edges of the fundamental square at offset 0: one I-shaped obstacle
// plus its three reflected copies.
struct ObstacleAtlas {
    int level = 1;
    long a = 0, b = 0, beta = 0;
    std::vector<Edge> high_edges;
    std::vector<Edge> low_edges;
};

ObstacleAtlas obstacle_atlas(const LevelScale& scale);

// O(1) classification of an edge given coordinates already reduced to the
// fundamental square (offset 0). High wins if a degenerate geometry would
// class an edge both ways.
std::optional<EdgeClass> classify_edge(const LevelScale& scale, EdgeDir dir, long x, long y);

struct EdgeCensus {
    long high = 0;
    long low = 0;
};

EdgeCensus special_edge_census(const EnvironmentSpec& env, int level);

// Resolves mu^n_e: the highest level k <= n classing the edge supplies eta_k
// or K_k; unclassed edges have conductance 1. Queries are pure and
// thread-safe.
class ConductanceField {
  public:
    // Default-constructed field is the uniform environment mu = 1.
    ConductanceField() = default;
    // Overrides replace K / eta at the top level only; lower levels keep
    // their stored k_tuned (querying an untuned lower-level strong edge
    // throws MissingTunedK).
    ConductanceField(const EnvironmentSpec& env, int level,
                     std::optional<double> k_override = std::nullopt,
                     std::optional<double> eta_override = std::nullopt);

    double edge_value(const Edge& e) const;
    double edge_value(const Coord& u, const Coord& v) const {
        return edge_value(make_edge(u, v));
    }
    int level_cap() const { return static_cast<int>(levels_.size()); }

  private:
    struct LevelCtx {
        long a, b, beta, ox, oy;
        double eta;
        std::optional<double> K;
        LevelScale shape;  // for classify_edge
    };
    std::vector<LevelCtx> levels_;
};

double conductance(const Edge& e, const EnvironmentSpec& env, int level);

std::string environment_to_json(const EnvironmentSpec& env);
EnvironmentSpec environment_from_json(const std::string& text);
// Full rule report for an environment document. Parse and schema errors
// throw ConfigError; rule violations only mark verdicts.
ValidationReport validate_environment_text(const std::string& text);
EnvironmentSpec load_environment(const std::string& path);
void save_environment(const EnvironmentSpec& env, const std::string& path);

}  // namespace condlab
