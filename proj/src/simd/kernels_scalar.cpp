#include "sfanc/simd/kernels.hpp"

namespace sfanc::simd::detail {

void caxpy_scalar(std::size_t n, cplx a, const double* xr, const double* xi,
                  double* yr, double* yi) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        yr[i] += ar * xr[i] - ai * xi[i];
        yi[i] += ar * xi[i] + ai * xr[i];
    }
}

double weighted_abs2_sum_scalar(std::size_t n, const double* re,
                                const double* im, const double* w) {
    double sum = 0.0;
    if (w) {
        for (std::size_t i = 0; i < n; ++i)
            sum += w[i] * (re[i] * re[i] + im[i] * im[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            sum += re[i] * re[i] + im[i] * im[i];
    }
    return sum;
}

}  // namespace sfanc::simd::detail
