#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace sfanc {

using cplx = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }
};

// Frequency/wavenumber pair. `time_sign` selects the phase convention:
// +1 for e^{+jwt} (outgoing waves carry H^(2)), -1 for the conjugate
// convention. All physical results are invariant under flipping it.
struct Wavenumber {
    double frequency_hz = 0.0;
    double k = 0.0;
    int time_sign = +1;

    static Wavenumber from_frequency(double f_hz, double sound_speed,
                                     int time_sign = +1) {
        return {f_hz, 2.0 * M_PI * f_hz / sound_speed, time_sign};
    }
};

}  // namespace sfanc
