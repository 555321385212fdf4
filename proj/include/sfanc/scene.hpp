#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "sfanc/geometry.hpp"

namespace sfanc {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct Disk {
    Vec2 center;
    double radius = 0.0;

    bool contains(const Vec2& p) const {
        return (p - center).norm() <= radius;
    }
};

// Experiment geometry and medium. Immutable after construction; field
// evaluations are pure functions.
struct SceneConfig {
    std::vector<Vec2> primary_sources;
    std::vector<Vec2> secondary_sources;
    std::vector<Vec2> reference_mics;
    std::vector<Vec2> error_mics;
    std::optional<Disk> scatterer;
    Disk target_region;
    double sound_speed = 343.0;

    // Throws std::invalid_argument naming the violated invariant.
    void validate() const;

    Wavenumber wavenumber(double f_hz, int time_sign = +1) const {
        return Wavenumber::from_frequency(f_hz, sound_speed, time_sign);
    }
};

// Free-field 2D Green's function -(j/4) H_0^(2)(k|r - r_src|) for the
// e^{+jwt} convention (conjugated when kw.time_sign == -1).
cplx greens_free_2d(const Wavenumber& kw, const Vec2& r, const Vec2& r_src);

// Ground-truth pressure of a unit point source: free-field term plus the
// rigid-cylinder scattered series when the scene has a scatterer.
cplx pressure_true(const SceneConfig& scene, const Wavenumber& kw,
                   const Vec2& src, const Vec2& r);

// True secondary paths: entry (m, l) = pressure at error mic m due to
// secondary source l, scattering included.
CMat transfer_matrix_G(const SceneConfig& scene, const Wavenumber& kw);

// The reference experiment layout: one primary source at (-3.5, 0.2) m,
// 12 secondary sources on a 1.0 m circle, 6 reference mics on a 2.0 m
// circle radially perturbed by +-0.03 m, 2 error mics at (+-0.3, 0),
// rigid scatterer of radius 0.15 m at the origin, target radius 0.5 m.
SceneConfig build_scene_paper();

}  // namespace sfanc
