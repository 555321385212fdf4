#pragma once

#include <array>
#include <vector>

#include "sfanc/scene.hpp"

namespace sfanc {

// Directional weighting kernel parameters. eta is a unit vector pointing
// toward the primary noise source; beta controls the sharpness of the
// directional emphasis (beta = 0 gives the isotropic kernel).
struct KernelParams {
    double beta = 0.0;
    std::array<double, 3> eta = {1.0, 0.0, 0.0};
    double lambda = 0.0;
    int dim = 2;

    void validate() const;
};

// kappa(r1, r2) = J0(sqrt((j beta eta - k r12)^T (j beta eta - k r12)))
// for dim = 2; spherical j0 for dim = 3. Principal-branch square root.
cplx kappa(const KernelParams& p, const Wavenumber& kw, const Vec2& r1,
           const Vec2& r2);
cplx kappa3(const KernelParams& p, const Wavenumber& kw,
            const std::array<double, 3>& r1, const std::array<double, 3>& r2);

// Gram matrix K with K(i, j) = kappa(point_i, point_j); Hermitian PSD.
CMat gram_matrix(const KernelParams& p, const Wavenumber& kw,
                 const std::vector<Vec2>& points);

// Reference-signal interpolation filter z_x(r) = [(K + lambda I)^-1]^T k(r),
// k(r)_i = kappa(r, ref_point_i). Factorizes once; evaluates at many r.
class InterpFilter {
  public:
    InterpFilter(const KernelParams& p, const Wavenumber& kw,
                 std::vector<Vec2> ref_points);

    CVec operator()(const Vec2& r) const;
    double condition_number() const { return cond_; }
    int size() const { return static_cast<int>(ref_points_.size()); }

  private:
    KernelParams params_;
    Wavenumber kw_;
    std::vector<Vec2> ref_points_;
    Eigen::LDLT<CMat> ldlt_;  // of (K + lambda I)^T, itself Hermitian
    double cond_ = 0.0;
};

CVec interp_filter_zx(const KernelParams& p, const Wavenumber& kw,
                      const std::vector<Vec2>& ref_points, const Vec2& r);

// Free-field secondary-field model: entry l = G(r, r_l). Deliberately
// ignores the scatterer; the mismatch against the true field is part of
// the experiment.
CVec secondary_model_zeta(const SceneConfig& scene, const Wavenumber& kw,
                          const Vec2& r);

// lambda = 1e-3 trace(K)/R when the config does not set it explicitly.
double default_lambda(const CMat& gram);

}  // namespace sfanc
