#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sfanc/specfun.hpp"

using namespace sfanc;
using sfanc::cplx;
namespace sf = sfanc::specfun;

// mpmath, 50-digit working precision, frozen.
namespace frozen {
constexpr double j0_1 = 0.765197686557966551450;
constexpr double y0_1 = 0.0882569642156769579829;
constexpr double j0_3 = -0.260051954901933437624;
constexpr double j0_100 = 0.0199858503042231224242;
constexpr double j0_zero1 = 2.40482555769577276862;
constexpr double i0_6 = 67.2344069764779753262;
constexpr double j25_40 = -0.0263603411759185070350;
constexpr double y25_40 = 0.140269719527764063204;
constexpr double j200_1000 = 0.00418353152502207564550;
constexpr double y200_1000 = 0.0251444882996911113646;
constexpr double j5_0p1 = 2.6030817909644415564e-9;
constexpr double y5_0p1 = -24461484.5023039085627;
const cplx j0_3_4i{-8.81214379369790554839, -4.59843789974303514001};
const cplx j0_20_10i{1546.02683721033339525, -1039.12157599515816243};
const cplx j0_50_25i{2620679513.35268, 2814665440.86875};
const cplx j0_90_30i{70268143916.9389, -432212598591.111};
constexpr double j0_30i = 781672297823.977;
}  // namespace frozen

TEST_CASE("bessel_j at trivial points") {
    CHECK(sf::bessel_j(0, 0.0) == 1.0);
    CHECK(sf::bessel_j(1, 0.0) == 0.0);
    CHECK(sf::bessel_j(7, 0.0) == 0.0);
}

TEST_CASE("bessel_j near the first zero of J0") {
    // locate the zero by bisection on the independent integral oracle
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (oracles::jn_integral(0, mid) > 0.0 ? lo : hi) = mid;
    }
    const double zero = 0.5 * (lo + hi);
    CHECK(zero == doctest::Approx(frozen::j0_zero1).epsilon(1e-12));
    CHECK(std::abs(sf::bessel_j(0, zero)) < 1e-12);
}

TEST_CASE("bessel_j / bessel_y against frozen references") {
    CHECK(sf::bessel_j(0, 1.0) == doctest::Approx(frozen::j0_1).epsilon(1e-12));
    CHECK(sf::bessel_y(0, 1.0) == doctest::Approx(frozen::y0_1).epsilon(1e-12));
    CHECK(sf::bessel_j(0, 3.0) == doctest::Approx(frozen::j0_3).epsilon(1e-12));
    CHECK(sf::bessel_j(0, 100.0) ==
          doctest::Approx(frozen::j0_100).epsilon(1e-11));
    CHECK(sf::bessel_j(25, 40.0) ==
          doctest::Approx(frozen::j25_40).epsilon(1e-10));
    CHECK(sf::bessel_y(25, 40.0) ==
          doctest::Approx(frozen::y25_40).epsilon(1e-10));
    CHECK(sf::bessel_j(200, 1000.0) ==
          doctest::Approx(frozen::j200_1000).epsilon(1e-10));
    CHECK(sf::bessel_y(200, 1000.0) ==
          doctest::Approx(frozen::y200_1000).epsilon(1e-10));
    CHECK(sf::bessel_j(5, 0.1) ==
          doctest::Approx(frozen::j5_0p1).epsilon(1e-10));
    CHECK(sf::bessel_y(5, 0.1) ==
          doctest::Approx(frozen::y5_0p1).epsilon(1e-10));
}

TEST_CASE("bessel_j against Miller backward-recurrence oracle") {
    for (int n : {0, 1, 2, 5, 10, 30, 60}) {
        for (double x : {0.3, 1.0, 4.7, 12.0, 55.0, 200.0}) {
            const double ref = oracles::jn_miller(n, x);
            const double got = sf::bessel_j(n, x);
            if (std::abs(ref) > 1e-280)
                CHECK(got == doctest::Approx(ref).epsilon(1e-10));
            else
                CHECK(std::abs(got - ref) < 1e-290);
        }
    }
}

TEST_CASE("hankel2 definition and small-argument asymptote") {
    const cplx h = sf::hankel2(0, 1.0);
    CHECK(h.real() == doctest::Approx(frozen::j0_1).epsilon(1e-12));
    CHECK(h.imag() == doctest::Approx(-frozen::y0_1).epsilon(1e-12));

    // Im H1^(2)(x) = -Y1(x) ~ 2/(pi x) for small x
    for (double x : {1e-4, 1e-5}) {
        const double ratio = sf::hankel2(1, x).imag() / (2.0 / (M_PI * x));
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("Bessel Wronskian identity") {
    for (double x : {0.5, 5.0, 50.0}) {
        for (int n : {0, 1, 3, 10}) {
            const double jn = sf::bessel_j(n, x);
            const double yn = sf::bessel_y(n, x);
            const double jp = sf::bessel_j_deriv(n, x);
            const double yp = n == 0 ? -sf::bessel_y(1, x)
                                     : sf::bessel_y(n - 1, x) - (n / x) * yn;
            CHECK(jn * yp - jp * yn ==
                  doctest::Approx(2.0 / (M_PI * x)).epsilon(1e-10));
        }
    }
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> ux(0.1, 100.0);
    for (int t = 0; t < 50; ++t) {
        const double x = ux(gen);
        const int n = t % 6;
        const double jn = sf::bessel_j(n, x);
        const double yn = sf::bessel_y(n, x);
        const double jp = sf::bessel_j_deriv(n, x);
        const double yp = n == 0 ? -sf::bessel_y(1, x)
                                 : sf::bessel_y(n - 1, x) - (n / x) * yn;
        CHECK(jn * yp - jp * yn ==
              doctest::Approx(2.0 / (M_PI * x)).epsilon(1e-8));
    }
}

TEST_CASE("derivative identities and finite differences") {
    CHECK(sf::bessel_j_deriv(0, 2.0) ==
          doctest::Approx(-sf::bessel_j(1, 2.0)).epsilon(1e-14));
    const cplx hd = sf::hankel2_deriv(0, 2.0);
    const cplx mh1 = -sf::hankel2(1, 2.0);
    CHECK(hd.real() == doctest::Approx(mh1.real()).epsilon(1e-14));
    CHECK(hd.imag() == doctest::Approx(mh1.imag()).epsilon(1e-14));

    const double h = 1e-5;
    for (int n = 0; n <= 10; ++n) {
        for (double x : {1.0, 10.0}) {
            const double fd =
                (sf::bessel_j(n, x + h) - sf::bessel_j(n, x - h)) / (2.0 * h);
            CHECK(std::abs(sf::bessel_j_deriv(n, x) - fd) <= 1e-6);
        }
    }
}

TEST_CASE("three-term recurrence consistency") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> ux(1.0, 100.0);
    for (int t = 0; t < 60; ++t) {
        const double x = ux(gen);
        const int n = 1 + t % 50;
        const double lhs = sf::bessel_j(n - 1, x) + sf::bessel_j(n + 1, x);
        const double rhs = (2.0 * n / x) * sf::bessel_j(n, x);
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-12});
        CHECK(std::abs(lhs - rhs) <= 1e-8 * scale);
    }
}

TEST_CASE("complex J0 trivial and identity values") {
    CHECK(sf::bessel_j0_complex(cplx(0.0, 0.0)) == cplx(1.0, 0.0));

    const cplx v = sf::bessel_j0_complex(cplx(0.0, 6.0));
    CHECK(v.real() == doctest::Approx(frozen::i0_6).epsilon(1e-10));
    CHECK(v.real() == doctest::Approx(oracles::i0_series(6.0)).epsilon(1e-10));
    CHECK(std::abs(v.imag()) < 1e-10 * v.real());

    const cplx w = sf::bessel_j0_complex(cplx(0.0, 30.0));
    CHECK(w.real() == doctest::Approx(frozen::j0_30i).epsilon(1e-10));
}

TEST_CASE("complex J0 agrees with the real-axis implementation") {
    for (double x = 0.25; x <= 100.0; x += 3.17) {
        const cplx v = sf::bessel_j0_complex(cplx(x, 0.0));
        const double ref = sf::bessel_j(0, x);
        const double scale = std::max(std::abs(ref), 1e-3);
        CHECK(std::abs(v.real() - ref) <= 1e-10 * scale);
        CHECK(std::abs(v.imag()) <= 1e-10 * scale);
    }
}

TEST_CASE("complex J0 against integral oracle across both regimes") {
    const cplx pts[] = {{3.0, 4.0},  {19.5, 3.0}, {20.5, 3.0}, {7.0, 18.0},
                        {40.0, 5.0}, {60.0, 20.0}, {0.5, 29.0}, {95.0, 10.0}};
    for (const cplx z : pts) {
        const cplx ref = oracles::j0_integral(z);
        const cplx got = sf::bessel_j0_complex(z);
        CHECK(std::abs(got - ref) <= 1e-8 * std::abs(ref));
    }
}

TEST_CASE("complex J0 against frozen references") {
    auto rel = [](cplx got, cplx ref) {
        return std::abs(got - ref) / std::abs(ref);
    };
    CHECK(rel(sf::bessel_j0_complex({3.0, 4.0}), frozen::j0_3_4i) < 1e-12);
    CHECK(rel(sf::bessel_j0_complex({20.0, 10.0}), frozen::j0_20_10i) < 1e-12);
    CHECK(rel(sf::bessel_j0_complex({50.0, 25.0}), frozen::j0_50_25i) < 1e-12);
    CHECK(rel(sf::bessel_j0_complex({90.0, 30.0}), frozen::j0_90_30i) < 1e-12);
}

TEST_CASE("complex J0 symmetries") {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> ur(-90.0, 90.0), ui(-25.0, 25.0);
    for (int t = 0; t < 40; ++t) {
        cplx z(ur(gen), ui(gen));
        if (std::abs(z) > 100.0) z *= 0.5;
        const cplx a = sf::bessel_j0_complex(z);
        const cplx b = sf::bessel_j0_complex(std::conj(z));
        CHECK(std::abs(b - std::conj(a)) <= 1e-12 * std::abs(a));
        const cplx c = sf::bessel_j0_complex(-z);
        CHECK(std::abs(c - a) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("array evaluation matches scalar calls") {
    const auto js = sf::bessel_j_array(30, 17.3);
    const auto ys = sf::bessel_y_array(30, 17.3);
    REQUIRE(js.size() == 31);
    REQUIRE(ys.size() == 31);
    for (int n = 0; n <= 30; ++n) {
        CHECK(js[n] == doctest::Approx(sf::bessel_j(n, 17.3)).epsilon(1e-12));
        CHECK(ys[n] == doctest::Approx(sf::bessel_y(n, 17.3)).epsilon(1e-12));
    }
}

TEST_CASE("domain errors fail loudly") {
    CHECK_THROWS_AS(sf::bessel_j(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_j(201, 1.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_j(0, 1.1e3), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_y(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(sf::hankel2(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(sf::bessel_j0_complex(cplx(120.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(sf::bessel_j0_complex(cplx(10.0, 40.0)),
                    std::domain_error);
}
