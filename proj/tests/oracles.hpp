#pragma once

// Test-only reference implementations, independent of the library's
// evaluation paths.

#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

using lcplx = std::complex<long double>;
using cplx = std::complex<double>;

// J0(z) via the integral representation J0 = (1/2pi) int_0^{2pi}
// cos(z sin t) dt; the integrand is entire and 2pi-periodic, so the
// trapezoid rule converges geometrically.
inline cplx j0_integral(cplx z, int n_panels = 4096) {
    const lcplx zl(z.real(), z.imag());
    lcplx sum(0.0L, 0.0L);
    for (int i = 0; i < n_panels; ++i) {
        const long double t = 2.0L * M_PIl * i / n_panels;
        sum += std::cos(zl * std::sin(t));
    }
    sum /= n_panels;
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// I0 by its power series in extended precision.
inline double i0_series(double x) {
    const long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int m = 1; m < 500; ++m) {
        term *= q / (static_cast<long double>(m) * m);
        sum += term;
        if (term < 1e-25L * sum) break;
    }
    return static_cast<double>(sum);
}

// J_n(x) by Miller's backward recurrence, normalized with
// J_0 + 2 sum_{m even >= 2} J_m = 1.
inline double jn_miller(int n, double x) {
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    int start = 2 * std::max(n, static_cast<int>(std::ceil(x))) + 60;
    if (start % 2 != 0) ++start;
    std::vector<long double> f(start + 2, 0.0L);
    f[start + 1] = 0.0L;
    f[start] = 1e-300L;
    for (int m = start; m >= 1; --m)
        f[m - 1] = (2.0L * m / x) * f[m] - f[m + 1];
    long double norm = f[0];
    for (int m = 2; m <= start; m += 2) norm += 2.0L * f[m];
    return static_cast<double>(f[n] / norm);
}

// J_n(x) by the integral (1/pi) int_0^pi cos(n t - x sin t) dt.
inline double jn_integral(int n, double x, int n_panels = 8192) {
    long double sum = 0.0L;
    for (int i = 0; i < n_panels; ++i) {
        const long double t = 2.0L * M_PIl * i / n_panels;
        sum += std::cos(n * t - static_cast<long double>(x) * std::sin(t));
    }
    return static_cast<double>(sum / n_panels);
}

}  // namespace oracles
