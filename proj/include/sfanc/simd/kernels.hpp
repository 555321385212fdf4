#pragma once

#include <cstddef>

#include "sfanc/geometry.hpp"

namespace sfanc::simd {

// Split-complex inner-loop kernels for the per-iteration field update.
// Backends share one contract; the AVX2 variant is selected at runtime
// when the CPU supports it. Reductions use a fixed lane order, so each
// backend is individually deterministic.
enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend b);
void set_backend(Backend b);  // throws std::runtime_error if unsupported

// y += a * x, complex, split storage.
void caxpy(std::size_t n, cplx a, const double* xr, const double* xi,
           double* yr, double* yi);

// sum_i w[i] * (re[i]^2 + im[i]^2); w == nullptr means unit weights.
double weighted_abs2_sum(std::size_t n, const double* re, const double* im,
                         const double* w);

namespace detail {
void caxpy_scalar(std::size_t n, cplx a, const double* xr, const double* xi,
                  double* yr, double* yi);
double weighted_abs2_sum_scalar(std::size_t n, const double* re,
                                const double* im, const double* w);
#if defined(__x86_64__) || defined(_M_X64)
void caxpy_avx2(std::size_t n, cplx a, const double* xr, const double* xi,
                double* yr, double* yi);
double weighted_abs2_sum_avx2(std::size_t n, const double* re,
                              const double* im, const double* w);
#endif
}  // namespace detail

}  // namespace sfanc::simd
