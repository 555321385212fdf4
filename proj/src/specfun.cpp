#include "sfanc/specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sfanc::specfun {

namespace {

constexpr int kMaxOrder = 200;
constexpr double kMaxArg = 1e3;

void check_real_args(int order, double x, bool positive_only) {
    if (order < 0 || order > kMaxOrder)
        throw std::domain_error("bessel: order out of range [0, 200]: " +
                                std::to_string(order));
    if (x < 0.0 || x > kMaxArg || (positive_only && x <= 0.0))
        throw std::domain_error("bessel: argument out of range: " +
                                std::to_string(x));
}

double gsl_eval(int (*fn)(int, double, gsl_sf_result*), int order, double x,
                const char* name) {
    gsl_sf_result res;
    const int status = fn(order, x, &res);
    if (status != GSL_SUCCESS)
        throw std::domain_error(std::string(name) + ": " +
                                gsl_strerror(status));
    return res.val;
}

struct GslHandlerGuard {
    GslHandlerGuard() { gsl_set_error_handler_off(); }
};
const GslHandlerGuard gsl_handler_guard;

using lcplx = std::complex<long double>;

// Power series sum_m (-1)^m (z^2/4)^m / (m!)^2 with compensated summation
// in extended precision. Loses ~|Im z|/ln10 + cancellation digits near
// |z| ~ 20, still leaves >10 correct digits there.
cplx j0_series(cplx z) {
    const lcplx q = -lcplx(z) * lcplx(z) / lcplx(4.0L);
    lcplx term(1.0L, 0.0L);
    lcplx sum = term;
    lcplx comp(0.0L, 0.0L);
    for (int m = 1; m < 200; ++m) {
        term *= q / lcplx(static_cast<long double>(m) *
                          static_cast<long double>(m));
        const lcplx y = term - comp;
        const lcplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) < 1e-20L * std::abs(sum) && m > 4) break;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Hankel asymptotic expansion, J0 = (H0^(1) + H0^(2))/2 with
// H0^(1,2)(z) ~ sqrt(2/(pi z)) e^{+-j(z - pi/4)} sum_m (+-j)^m a_m / z^m,
// a_m = prod_{k=1..m} -(2k-1)^2 / (8k). Requires Re z >= 0 here (callers
// reflect using J0(-z) = J0(z)); truncated at the smallest term.
cplx j0_asymptotic(cplx z) {
    const cplx j(0.0, 1.0);
    cplx s1(1.0, 0.0), s2(1.0, 0.0);
    cplx t1(1.0, 0.0), t2(1.0, 0.0);
    double prev = 1.0;
    for (int m = 1; m < 60; ++m) {
        const double am_step = -static_cast<double>((2 * m - 1) * (2 * m - 1)) /
                               (8.0 * m);
        t1 *= am_step * j / z;
        t2 *= am_step * (-j) / z;
        const double mag = std::abs(t1);
        if (mag >= prev) break;  // divergent tail reached
        s1 += t1;
        s2 += t2;
        prev = mag;
        if (mag < 1e-17 * std::abs(s1)) break;
    }
    const cplx amp = std::sqrt(2.0 / (M_PI * z));
    const cplx phase = z - M_PI / 4.0;
    return 0.5 * amp * (std::exp(j * phase) * s1 + std::exp(-j * phase) * s2);
}

}  // namespace

double bessel_j(int order, double x) {
    check_real_args(order, x, /*positive_only=*/false);
    return gsl_eval(&gsl_sf_bessel_Jn_e, order, x, "bessel_j");
}

double bessel_y(int order, double x) {
    check_real_args(order, x, /*positive_only=*/true);
    return gsl_eval(&gsl_sf_bessel_Yn_e, order, x, "bessel_y");
}

cplx hankel2(int order, double x) {
    return {bessel_j(order, x), -bessel_y(order, x)};
}

double bessel_j_deriv(int order, double x) {
    if (order == 0) return -bessel_j(1, x);
    return bessel_j(order - 1, x) - (order / x) * bessel_j(order, x);
}

cplx hankel2_deriv(int order, double x) {
    if (order == 0) return -hankel2(1, x);
    return hankel2(order - 1, x) - (order / x) * hankel2(order, x);
}

cplx bessel_j0_complex(cplx z) {
    if (!(std::abs(z) <= 100.0) || !(std::abs(z.imag()) <= 30.0))
        throw std::domain_error("bessel_j0_complex: argument outside "
                                "validated region |z|<=100, |Im z|<=30");
    // J0 is even and satisfies J0(conj z) = conj(J0(z)); fold into the
    // first quadrant so the asymptotic branch stays away from arg z = pi.
    // Evenness flips both signs at once, so negate first, then conjugate.
    cplx w = z.real() < 0.0 ? -z : z;
    const bool conj_back = w.imag() < 0.0;
    if (conj_back) w = std::conj(w);
    cplx v = (std::abs(w) <= 20.0) ? j0_series(w) : j0_asymptotic(w);
    if (conj_back) v = std::conj(v);
    return v;
}

std::vector<double> bessel_j_array(int nmax, double x) {
    check_real_args(nmax, x, /*positive_only=*/false);
    std::vector<double> out(nmax + 1);
    const int status = gsl_sf_bessel_Jn_array(0, nmax, x, out.data());
    if (status != GSL_SUCCESS)
        throw std::domain_error(std::string("bessel_j_array: ") +
                                gsl_strerror(status));
    return out;
}

std::vector<double> bessel_y_array(int nmax, double x) {
    check_real_args(nmax, x, /*positive_only=*/true);
    std::vector<double> out(nmax + 1);
    const int status = gsl_sf_bessel_Yn_array(0, nmax, x, out.data());
    if (status != GSL_SUCCESS)
        throw std::domain_error(std::string("bessel_y_array: ") +
                                gsl_strerror(status));
    return out;
}

}  // namespace sfanc::specfun
