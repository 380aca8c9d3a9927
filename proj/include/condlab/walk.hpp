#pragma once

#include <cstdint>
#include <vector>

#include "condlab/environment.hpp"
#include "condlab/lattice.hpp"
#include "condlab/rng.hpp"

namespace condlab {

// One sojourn: the walk sits at pos from time t until the next event.
struct WalkEvent {
    double t = 0.0;
    Coord pos{0, 0};
};

struct WalkPath {
    std::vector<WalkEvent> events; // events[0] = {0, start}
    double horizon = 0.0;          // time actually covered
    bool truncated = false;        // stopped at the event cap instead
};

struct WalkOptions {
    std::size_t max_events = 100000000;
};

// Incident edge weights at a site, in the fixed draw order right, left,
// up, down.
struct JumpRates {
    double right = 0.0, left = 0.0, up = 0.0, down = 0.0;
    double total = 0.0;
};

JumpRates local_rates(const ConductanceField& field, const Coord& pos);

// Waits Exp(total incident weight), then jumps to a neighbor chosen with
// probability proportional to its edge weight. Holding times and jump
// choices come from separate streams keyed by (seed, purpose, path_index),
// so paths with distinct indices are independent and reproducible.
// Throws ZeroRate if the walk reaches a site with no positive edge.
WalkPath simulate_path(const ConductanceField& field, const Coord& start,
                       double horizon, std::uint64_t seed, std::uint64_t path_index,
                       const WalkOptions& opts = {});

// Right-continuous position; t must lie in [0, horizon].
Coord position_at(const WalkPath& path, double t);

struct ScaledPoint {
    double t = 0.0;
    double x = 0.0, y = 0.0;
};

struct ScaledPath {
    std::vector<ScaledPoint> events;
    double horizon = 0.0;
    double eps = 0.0;
};

// Diffusive rescaling: positions by eps, times by eps^2. Throws
// HorizonTooShort if the scaled horizon falls below required_horizon.
ScaledPath rescale(const WalkPath& path, double eps, double required_horizon = 0.0);

// Rescaling composes: rescale(rescale(p, e1), e2) = rescale(p, e1*e2).
ScaledPath rescale(const ScaledPath& path, double eps, double required_horizon = 0.0);

ScaledPoint scaled_position_at(const ScaledPath& path, double t);

// |Z(t) - Z(0)|^2 for the rescaled path.
double squared_displacement(const ScaledPath& path, double t);

// Corridor crossing indicator on [0, 1], relative to the starting point:
// the second coordinate stays strictly inside (-3/4, 3/4), the first
// inside [-2, 2], and the first coordinate exceeds 1 at time 1. Piecewise
// constant paths are checked exactly at their jump times.
bool crossing_event(const ScaledPath& path);

} // namespace condlab
