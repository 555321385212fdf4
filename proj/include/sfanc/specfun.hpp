#pragma once

#include <complex>
#include <vector>

#include "sfanc/geometry.hpp"

namespace sfanc::specfun {

// Cylindrical Bessel functions of integer order. Validated ranges:
// 0 <= order <= 200, 0 <= x <= 1e3 (x > 0 where Y diverges).
// Out-of-range arguments throw std::domain_error.
double bessel_j(int order, double x);
double bessel_y(int order, double x);

// H_n^(2)(x) = J_n(x) - j Y_n(x).
cplx hankel2(int order, double x);

// Derivatives via C_n'(x) = C_{n-1}(x) - (n/x) C_n(x), C_0' = -C_1.
double bessel_j_deriv(int order, double x);
cplx hankel2_deriv(int order, double x);

// J_0 of a complex argument. Validated for |z| <= 100, |Im z| <= 30;
// throws std::domain_error outside that region.
cplx bessel_j0_complex(cplx z);

// J_0(x)..J_nmax(x) and Y_0(x)..Y_nmax(x) in one call (scattering series).
std::vector<double> bessel_j_array(int nmax, double x);
std::vector<double> bessel_y_array(int nmax, double x);

}  // namespace sfanc::specfun
