#include "condlab/kernels.hpp"

#include <immintrin.h>

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
namespace condlab::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void xpay_avx2(const double* x, double beta, double* y, std::size_t n) {
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(vb, vy, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] = x[i] + beta * y[i];
}

void hdiv_avx2(const double* r, const double* d, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(z + i, _mm256_div_pd(_mm256_loadu_pd(r + i), _mm256_loadu_pd(d + i)));
    for (; i < n; ++i) z[i] = r[i] / d[i];
}

void stencil_avx2(const Stencil& s, const double* x, double* out) {
    const std::size_t m = s.stride;
    for (std::size_t i = 0; i < m; ++i) out[i] = 0.0;
    std::size_t i = m;
    const std::size_t end = s.n - m;
    for (; i + 4 <= end; i += 4) {
        __m256d acc = _mm256_mul_pd(_mm256_loadu_pd(s.diag + i), _mm256_loadu_pd(x + i));
        acc = _mm256_fnmadd_pd(_mm256_loadu_pd(s.wl + i), _mm256_loadu_pd(x + i - 1), acc);
        acc = _mm256_fnmadd_pd(_mm256_loadu_pd(s.wr + i), _mm256_loadu_pd(x + i + 1), acc);
        acc = _mm256_fnmadd_pd(_mm256_loadu_pd(s.wd + i), _mm256_loadu_pd(x + i - m), acc);
        acc = _mm256_fnmadd_pd(_mm256_loadu_pd(s.wu + i), _mm256_loadu_pd(x + i + m), acc);
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < end; ++i) {
        out[i] = s.diag[i] * x[i] - s.wl[i] * x[i - 1] - s.wr[i] * x[i + 1] -
                 s.wd[i] * x[i - m] - s.wu[i] * x[i + m];
    }
    for (i = end; i < s.n; ++i) out[i] = 0.0;
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops = {"avx2", dot_avx2, axpy_avx2, xpay_avx2,
                            hdiv_avx2, stencil_avx2};
    return &ops;
}

}  // namespace condlab::kernels
