#pragma once

#include <cstddef>
#include <vector>

namespace condlab {

// Edge weights on the square [0,a]^2.
// hw[y*a + x]  : edge (x,y)-(x+1,y), x in [0,a), y in [0,a]
// vw[y*(a+1)+x]: edge (x,y)-(x,y+1), x in [0,a], y in [0,a)
struct WeightGrid {
    long a = 0;
    std::vector<double> hw;
    std::vector<double> vw;

    static WeightGrid uniform(long a);
    double& h(long x, long y) { return hw[static_cast<std::size_t>(y) * a + x]; }
    double& v(long x, long y) { return vw[static_cast<std::size_t>(y) * (a + 1) + x]; }
    double h(long x, long y) const { return hw[static_cast<std::size_t>(y) * a + x]; }
    double v(long x, long y) const { return vw[static_cast<std::size_t>(y) * (a + 1) + x]; }

    // Halves every edge whose endpoints both lie on the outer frame.
    void apply_border_halving();
};

struct SolveOptions {
    double residual_tol = 1e-12;  // relative to ||rhs||
    std::size_t max_iters = 400000;
};

struct SolveStats {
    std::size_t iterations = 0;
    double relative_residual = 0.0;
};

// Solves the Dirichlet problem f(x,0)=0, f(x,a)=1 for the weighted graph
// Laplacian via Jacobi-preconditioned CG. `f` holds the full (a+1)^2 grid
// row-major and may carry a warm start in its interior rows; boundary rows
// are (re)pinned. Nodes with no incident weight are pinned to their current
// value. Throws SolverDiverged when the iteration cap is hit.
SolveStats solve_dirichlet(const WeightGrid& w, std::vector<double>& f,
                           const SolveOptions& opts = {});

// Compensated Dirichlet energy sum(w * df^2) of a full-grid potential.
double grid_energy(const WeightGrid& w, const std::vector<double>& f);

std::vector<double> linear_ramp(long a);

}  // namespace condlab
