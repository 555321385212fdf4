#include "sfanc/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "sfanc/specfun.hpp"

namespace sfanc {

namespace {

// Non-conjugated dot product (j beta eta - k r12) . (j beta eta - k r12),
// expanded in real arithmetic: (k^2 |r12|^2 - beta^2) - 2 j beta k (eta.r12).
cplx kernel_argument_sq(double beta, const double* eta, const double* r12,
                        double k, int dim) {
    double r2 = 0.0, er = 0.0;
    for (int d = 0; d < dim; ++d) {
        r2 += r12[d] * r12[d];
        er += eta[d] * r12[d];
    }
    return {k * k * r2 - beta * beta, -2.0 * beta * k * er};
}

cplx sph_j0(cplx z) {
    if (std::abs(z) < 1e-8) return 1.0 - z * z / 6.0;
    return std::sin(z) / z;
}

cplx kappa_impl(const KernelParams& p, const Wavenumber& kw, const double* r12,
                int dim) {
    const cplx w = kernel_argument_sq(p.beta, p.eta.data(), r12, kw.k, dim);
    const cplx z = std::sqrt(w);  // principal branch; J0/j0 are even
    const cplx v = (dim == 2) ? specfun::bessel_j0_complex(z) : sph_j0(z);
    return kw.time_sign >= 0 ? v : std::conj(v);
}

}  // namespace

void KernelParams::validate() const {
    if (beta < 0.0)
        throw std::invalid_argument("KernelParams: beta must be >= 0");
    if (lambda < 0.0)
        throw std::invalid_argument("KernelParams: lambda must be >= 0");
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("KernelParams: dim must be 2 or 3");
    double n2 = 0.0;
    for (int d = 0; d < dim; ++d) n2 += eta[d] * eta[d];
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
        throw std::invalid_argument("KernelParams: eta must be a unit vector");
}

cplx kappa(const KernelParams& p, const Wavenumber& kw, const Vec2& r1,
           const Vec2& r2) {
    const double r12[2] = {r1.x - r2.x, r1.y - r2.y};
    return kappa_impl(p, kw, r12, 2);
}

cplx kappa3(const KernelParams& p, const Wavenumber& kw,
            const std::array<double, 3>& r1, const std::array<double, 3>& r2) {
    const double r12[3] = {r1[0] - r2[0], r1[1] - r2[1], r1[2] - r2[2]};
    KernelParams p3 = p;
    p3.dim = 3;
    return kappa_impl(p3, kw, r12, 3);
}

CMat gram_matrix(const KernelParams& p, const Wavenumber& kw,
                 const std::vector<Vec2>& points) {
    const auto n = points.size();
    CMat K(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            K(i, j) = kappa(p, kw, points[i], points[j]);
    return K;
}

double default_lambda(const CMat& gram) {
    return 1e-3 * gram.trace().real() / static_cast<double>(gram.rows());
}

InterpFilter::InterpFilter(const KernelParams& p, const Wavenumber& kw,
                           std::vector<Vec2> ref_points)
    : params_(p), kw_(kw), ref_points_(std::move(ref_points)) {
    params_.validate();
    const CMat K = gram_matrix(params_, kw_, ref_points_);
    // z_x(r) solves (K + lambda I)^T z = kappa(r); the transpose of a
    // Hermitian matrix is its conjugate, still Hermitian.
    const CMat A =
        K.transpose() + params_.lambda * CMat::Identity(K.rows(), K.cols());

    Eigen::SelfAdjointEigenSolver<CMat> es(A);
    const double emax = es.eigenvalues().cwiseAbs().maxCoeff();
    const double emin = es.eigenvalues().cwiseAbs().minCoeff();
    if (!(emin > 1e-15 * emax))
        throw std::runtime_error(
            "InterpFilter: Gram matrix is numerically singular "
            "(increase lambda or perturb reference positions)");
    cond_ = emax / emin;
    ldlt_.compute(A);
}

CVec InterpFilter::operator()(const Vec2& r) const {
    CVec kap(ref_points_.size());
    for (size_t i = 0; i < ref_points_.size(); ++i)
        kap(i) = kappa(params_, kw_, r, ref_points_[i]);
    return ldlt_.solve(kap);
}

CVec interp_filter_zx(const KernelParams& p, const Wavenumber& kw,
                      const std::vector<Vec2>& ref_points, const Vec2& r) {
    return InterpFilter(p, kw, ref_points)(r);
}

CVec secondary_model_zeta(const SceneConfig& scene, const Wavenumber& kw,
                          const Vec2& r) {
    const auto L = scene.secondary_sources.size();
    CVec zeta(L);
    for (size_t l = 0; l < L; ++l)
        zeta(l) = greens_free_2d(kw, r, scene.secondary_sources[l]);
    return zeta;
}

}  // namespace sfanc
