#pragma once

#include <map>
#include <vector>

#include "condlab/environment.hpp"
#include "condlab/lattice.hpp"
#include "condlab/solver.hpp"

namespace condlab {

// Antisymmetric edge current on the square [0,a]^2. ih(x,y) is the signed
// current from (x,y) to (x+1,y); iv(x,y) from (x,y) to (x,y+1). Positive
// flux means net transport out of the top-row nodes into the square, so a
// normalized flow runs from the top boundary down to the bottom.
struct FlowField {
    long a = 0;
    std::vector<double> ih; // (a+1) rows of a entries
    std::vector<double> iv; // a rows of (a+1) entries

    static FlowField zero(long a);

    double& ih_at(long x, long y) { return ih[static_cast<std::size_t>(y) * static_cast<std::size_t>(a) + static_cast<std::size_t>(x)]; }
    double& iv_at(long x, long y) { return iv[static_cast<std::size_t>(y) * static_cast<std::size_t>(a + 1) + static_cast<std::size_t>(x)]; }
    double ih_at(long x, long y) const { return ih[static_cast<std::size_t>(y) * static_cast<std::size_t>(a) + static_cast<std::size_t>(x)]; }
    double iv_at(long x, long y) const { return iv[static_cast<std::size_t>(y) * static_cast<std::size_t>(a + 1) + static_cast<std::size_t>(x)]; }
};

// Adds `current` along the axis-aligned polyline through `waypoints`.
// Throws std::invalid_argument if consecutive waypoints share neither
// coordinate or leave the square.
void add_path(FlowField& flow, const std::vector<Coord>& waypoints, double current);

// Sum over top-row nodes of the current leaving the node along in-square
// edges. Horizontal contributions cancel, so this equals the net downward
// current through the top layer of vertical edges.
double flux(const FlowField& flow);

// Net current out of node (x,y).
double node_divergence(const FlowField& flow, long x, long y);

// Largest |divergence| over interior nodes (0 < x,y < a).
double max_interior_divergence(const FlowField& flow);

// Energy sum I_e^2 / w_e over edges with nonzero current. A nonzero
// current across a zero-weight edge throws InfiniteEnergy.
double flow_energy(const FlowField& flow, const WeightGrid& w);

// Same sum restricted to edges inside the b x b tile with lower-left
// corner (tx*b, ty*b). When halve_shared is set, edges lying on a tile
// boundary that is not part of the outer frame count with weight doubled
// (each such edge is shared by two tiles).
double tile_energy(const FlowField& flow, const WeightGrid& w, long tx, long ty,
                   long b, bool halve_shared);

// I = w * grad f on the tilde-weighted grid: current from lower to higher
// potential.
FlowField gradient_flow(const WeightGrid& w, const std::vector<double>& f);

void scale_flow(FlowField& flow, double s);

// Divides by flux(flow). Throws std::invalid_argument on zero flux.
FlowField normalize_flux(FlowField flow);

// Unit-flux flow of straight vertical filaments: interior columns carry
// 1/a, the two boundary columns 1/(2a). Energy on the uniform tilde grid
// is exactly 1.
FlowField column_flow(long a);

// Diagonal reflection (x,y) -> (y,x) applied to every edge current.
FlowField reflect_flow_diagonal(const FlowField& flow);

// Waypoint polyline per diverted column, keyed by the column x. Each
// polyline starts at (x,a) and ends at (x,0).
using DiversionPlan = std::map<long, std::vector<Coord>>;

// Column flow with the planned columns rerouted. Throws RoutingConflict
// if a plan column lies outside [0,a] or is a boundary column.
FlowField filament_flow(long a, const DiversionPlan& plan);

// Reroutes the columns of one b x b tile around it through the staging
// column one tile to the left. blocked_cols are the absolute x of the
// columns to divert; the tile spans y in [y0, y0+b).
DiversionPlan tile_dodge_plan(long a, long b, long y0, const std::vector<long>& blocked_cols);

// Diversion plan for the vertical bars of the obstacle layout at offset
// zero: each covered column rides the inside of its slow channel.
// Horizontal bars need no vertical diversion; they are checked by the
// final slow-edge scan in build_diverted_flow.
DiversionPlan obstacle_plan(const LevelScale& s);

// Unit-flux flow avoiding every slow edge of the top-level obstacle layout
// (offsets pinned to zero). Throws RoutingConflict if any constructed
// current crosses a slow edge.
FlowField build_diverted_flow(const EnvironmentSpec& env, int level);

} // namespace condlab
