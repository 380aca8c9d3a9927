#pragma once

#include <cstdint>
#include <string>

#include "condlab/functional.hpp"

namespace condlab {

// Limit process: planar Brownian motion with per-coordinate variance 2t,
// started at the origin.

struct BmEstimate {
    double value = 0.0;
    double std_error = 0.0; // zero for the quadrature method
    std::string method;     // "quadrature" or "monte-carlo"
};

// Expected functional value. Up to four times the separable bump product
// factorizes per coordinate and is integrated by panel Gauss-Legendre
// rules threaded through the transition kernel; beyond four times a fixed
// Monte Carlo fallback is used.
BmEstimate bm_reference(const FunctionalSpec& spec, int nodes_per_panel = 40,
                        std::size_t mc_paths = 1000000, std::uint64_t mc_seed = 2026);

BmEstimate bm_mc_reference(const FunctionalSpec& spec, std::size_t paths,
                           std::uint64_t seed);

struct CrossingEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t paths = 0;
};

// Probability of the corridor crossing for the limit process, by Euler
// simulation with a two-barrier bridge correction on the second
// coordinate. direction -1 asks for the mirror crossing to the left.
CrossingEstimate bm_crossing_mc(std::size_t paths, std::uint64_t seed,
                                double dt = 1e-4, int direction = 1);

} // namespace condlab
