#pragma once

#include <cstddef>

namespace condlab::kernels {

// Five-band stencil over a rectangular grid stored row-major. Rows
// [0, stride) and [n - stride, n) are Dirichlet rows: apply writes zeros
// there. Off-band weights must be zeroed where a neighbor does not exist.
struct Stencil {
    std::size_t n = 0;
    std::size_t stride = 0;
    const double* diag = nullptr;
    const double* wl = nullptr;
    const double* wr = nullptr;
    const double* wd = nullptr;
    const double* wu = nullptr;
};

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);
using XpayFn = void (*)(const double*, double, double*, std::size_t);
using HadamardDivFn = void (*)(const double*, const double*, double*, std::size_t);
using StencilApplyFn = void (*)(const Stencil&, const double*, double*);

struct Ops {
    const char* name;
    DotFn dot;
    AxpyFn axpy;         // y += alpha * x
    XpayFn xpay;         // y = x + beta * y
    HadamardDivFn hdiv;  // z = r / d elementwise
    StencilApplyFn stencil_apply;
};

const Ops& scalar_ops();
// Null when the binary was built without AVX2 or the CPU lacks it.
const Ops* avx2_ops();

const Ops& active_ops();
// name: "scalar", "avx2", or "auto". Throws std::invalid_argument for
// unknown names and std::runtime_error when the backend is unavailable.
void force_backend(const char* name);

}  // namespace condlab::kernels
