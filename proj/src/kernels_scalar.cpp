#include "condlab/kernels.hpp"

namespace condlab::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void xpay_scalar(const double* x, double beta, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + beta * y[i];
}

void hdiv_scalar(const double* r, const double* d, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / d[i];
}

void stencil_scalar(const Stencil& s, const double* x, double* out) {
    const std::size_t m = s.stride;
    for (std::size_t i = 0; i < m; ++i) out[i] = 0.0;
    for (std::size_t i = m; i < s.n - m; ++i) {
        out[i] = s.diag[i] * x[i] - s.wl[i] * x[i - 1] - s.wr[i] * x[i + 1] -
                 s.wd[i] * x[i - m] - s.wu[i] * x[i + m];
    }
    for (std::size_t i = s.n - m; i < s.n; ++i) out[i] = 0.0;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {"scalar", dot_scalar, axpy_scalar, xpay_scalar,
                            hdiv_scalar, stencil_scalar};
    return ops;
}

}  // namespace condlab::kernels
