#include <atomic>
#include <stdexcept>

#include "sfanc/simd/kernels.hpp"

namespace sfanc::simd {

namespace {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick_default() {
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{pick_default()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool backend_available(Backend b) {
    return b == Backend::scalar || (b == Backend::avx2 && avx2_supported());
}

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error("simd: requested backend not supported here");
    g_backend.store(b, std::memory_order_relaxed);
}

void caxpy(std::size_t n, cplx a, const double* xr, const double* xi,
           double* yr, double* yi) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2)
        return detail::caxpy_avx2(n, a, xr, xi, yr, yi);
#endif
    detail::caxpy_scalar(n, a, xr, xi, yr, yi);
}

double weighted_abs2_sum(std::size_t n, const double* re, const double* im,
                         const double* w) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::avx2)
        return detail::weighted_abs2_sum_avx2(n, re, im, w);
#endif
    return detail::weighted_abs2_sum_scalar(n, re, im, w);
}

}  // namespace sfanc::simd
