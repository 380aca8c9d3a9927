#include "condlab/solver.hpp"

#include <cmath>

#include "condlab/errors.hpp"
#include "condlab/kernels.hpp"
#include "condlab/stats.hpp"

namespace condlab {

WeightGrid WeightGrid::uniform(long a) {
    WeightGrid w;
    w.a = a;
    w.hw.assign(static_cast<std::size_t>(a + 1) * a, 1.0);
    w.vw.assign(static_cast<std::size_t>(a) * (a + 1), 1.0);
    return w;
}

void WeightGrid::apply_border_halving() {
    for (long x = 0; x < a; ++x) {
        h(x, 0) *= 0.5;
        h(x, a) *= 0.5;
    }
    for (long y = 0; y < a; ++y) {
        v(0, y) *= 0.5;
        v(a, y) *= 0.5;
    }
}

std::vector<double> linear_ramp(long a) {
    std::vector<double> f(static_cast<std::size_t>(a + 1) * (a + 1));
    for (long y = 0; y <= a; ++y)
        for (long x = 0; x <= a; ++x)
            f[static_cast<std::size_t>(y) * (a + 1) + x] =
                static_cast<double>(y) / static_cast<double>(a);
    return f;
}

SolveStats solve_dirichlet(const WeightGrid& w, std::vector<double>& f,
                           const SolveOptions& opts) {
    const long a = w.a;
    const std::size_t stride = static_cast<std::size_t>(a + 1);
    const std::size_t n = stride * stride;
    if (f.size() != n) throw SolverDiverged("potential grid has wrong size");

    for (double x : w.hw)
        if (x < 0.0 || !std::isfinite(x)) throw SingularWeights("negative or non-finite weight");
    for (double x : w.vw)
        if (x < 0.0 || !std::isfinite(x)) throw SingularWeights("negative or non-finite weight");

    // Dirichlet rows.
    for (long x = 0; x <= a; ++x) {
        f[static_cast<std::size_t>(x)] = 0.0;
        f[static_cast<std::size_t>(a) * stride + x] = 1.0;
    }

    // Assemble the interior stencil; boundary-row couplings are eliminated
    // into the right-hand side.
    std::vector<double> diag(n, 1.0), wl(n, 0.0), wr(n, 0.0), wd(n, 0.0), wu(n, 0.0), rhs(n, 0.0);
    for (long y = 1; y < a; ++y) {
        for (long x = 0; x <= a; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * stride + x;
            double deg = 0.0;
            const double up = w.v(x, y);
            const double down = w.v(x, y - 1);
            deg += up + down;
            if (y + 1 == a)
                rhs[i] += up * 1.0;
            else
                wu[i] = up;
            if (y - 1 > 0) wd[i] = down;
            if (x < a) {
                const double right = w.h(x, y);
                deg += right;
                wr[i] = right;
            }
            if (x > 0) {
                const double left = w.h(x - 1, y);
                deg += left;
                wl[i] = left;
            }
            if (deg > 0.0) {
                diag[i] = deg;
            } else {
                // Disconnected node (all incident weights zero): pin it.
                diag[i] = 1.0;
                wl[i] = wr[i] = wd[i] = wu[i] = 0.0;
                rhs[i] = f[i] = 0.0;
            }
        }
    }

    const auto& ops = kernels::active_ops();
    kernels::Stencil st{n, stride, diag.data(), wl.data(), wr.data(), wd.data(), wu.data()};

    // Krylov vectors are zero on the Dirichlet rows throughout.
    std::vector<double> u(n, 0.0);
    for (long y = 1; y < a; ++y)
        for (long x = 0; x <= a; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * stride + x;
            u[i] = f[i];
        }

    std::vector<double> r(n, 0.0), z(n, 0.0), p(n, 0.0), q(n, 0.0);
    ops.stencil_apply(st, u.data(), r.data());
    for (std::size_t i = stride; i < n - stride; ++i) r[i] = rhs[i] - r[i];

    const double bnorm = std::sqrt(ops.dot(rhs.data(), rhs.data(), n));
    const double target = opts.residual_tol * (bnorm > 0.0 ? bnorm : 1.0);

    double rnorm = std::sqrt(ops.dot(r.data(), r.data(), n));
    SolveStats stats;
    if (rnorm > target) {
        ops.hdiv(r.data(), diag.data(), z.data(), n);
        p = z;
        double rz = ops.dot(r.data(), z.data(), n);
        for (std::size_t it = 1; it <= opts.max_iters; ++it) {
            ops.stencil_apply(st, p.data(), q.data());
            const double pq = ops.dot(p.data(), q.data(), n);
            if (pq <= 0.0) throw SolverDiverged("CG lost positive definiteness");
            const double alpha = rz / pq;
            ops.axpy(alpha, p.data(), u.data(), n);
            ops.axpy(-alpha, q.data(), r.data(), n);
            rnorm = std::sqrt(ops.dot(r.data(), r.data(), n));
            stats.iterations = it;
            if (rnorm <= target) break;
            if (it == opts.max_iters)
                throw SolverDiverged("CG iteration cap hit, residual " + std::to_string(rnorm));
            ops.hdiv(r.data(), diag.data(), z.data(), n);
            const double rz_new = ops.dot(r.data(), z.data(), n);
            ops.xpay(z.data(), rz_new / rz, p.data(), n);
            rz = rz_new;
        }
    }
    stats.relative_residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;

    for (long y = 1; y < a; ++y)
        for (long x = 0; x <= a; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * stride + x;
            f[i] = u[i];
        }
    return stats;
}

double grid_energy(const WeightGrid& w, const std::vector<double>& f) {
    const long a = w.a;
    const std::size_t stride = static_cast<std::size_t>(a + 1);
    CompensatedSum e;
    for (long y = 0; y <= a; ++y)
        for (long x = 0; x < a; ++x) {
            const double d = f[static_cast<std::size_t>(y) * stride + x + 1] -
                             f[static_cast<std::size_t>(y) * stride + x];
            e.add(w.h(x, y) * d * d);
        }
    for (long y = 0; y < a; ++y)
        for (long x = 0; x <= a; ++x) {
            const double d = f[static_cast<std::size_t>(y + 1) * stride + x] -
                             f[static_cast<std::size_t>(y) * stride + x];
            e.add(w.v(x, y) * d * d);
        }
    return e.value();
}

}  // namespace condlab
