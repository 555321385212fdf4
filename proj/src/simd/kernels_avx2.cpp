#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "sfanc/simd/kernels.hpp"

namespace sfanc::simd::detail {

void caxpy_avx2(std::size_t n, cplx a, const double* xr, const double* xi,
                double* yr, double* yi) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vr = _mm256_loadu_pd(xr + i);
        const __m256d vi = _mm256_loadu_pd(xi + i);
        __m256d or_ = _mm256_loadu_pd(yr + i);
        __m256d oi = _mm256_loadu_pd(yi + i);
        or_ = _mm256_fmadd_pd(ar, vr, _mm256_fnmadd_pd(ai, vi, or_));
        oi = _mm256_fmadd_pd(ar, vi, _mm256_fmadd_pd(ai, vr, oi));
        _mm256_storeu_pd(yr + i, or_);
        _mm256_storeu_pd(yi + i, oi);
    }
    if (i < n)
        caxpy_scalar(n - i, a, xr + i, xi + i, yr + i, yi + i);
}

double weighted_abs2_sum_avx2(std::size_t n, const double* re,
                              const double* im, const double* w) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    if (w) {
        for (; i + 4 <= n; i += 4) {
            const __m256d vr = _mm256_loadu_pd(re + i);
            const __m256d vi = _mm256_loadu_pd(im + i);
            const __m256d vw = _mm256_loadu_pd(w + i);
            const __m256d p =
                _mm256_fmadd_pd(vr, vr, _mm256_mul_pd(vi, vi));
            acc = _mm256_fmadd_pd(vw, p, acc);
        }
    } else {
        for (; i + 4 <= n; i += 4) {
            const __m256d vr = _mm256_loadu_pd(re + i);
            const __m256d vi = _mm256_loadu_pd(im + i);
            acc = _mm256_add_pd(
                acc, _mm256_fmadd_pd(vr, vr, _mm256_mul_pd(vi, vi)));
        }
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
    if (i < n)
        sum += weighted_abs2_sum_scalar(n - i, re + i, im + i,
                                        w ? w + i : nullptr);
    return sum;
}

}  // namespace sfanc::simd::detail

#endif
