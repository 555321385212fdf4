#include "sfanc/quadrature.hpp"

#include <cmath>
#include <numeric>
#include <limits>
#include <stdexcept>

#include "sfanc/simd/kernels.hpp"

namespace sfanc {

double RegionGrid::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

RegionGrid make_grid(const Disk& target_region,
                     const std::optional<Disk>& scatterer, double spacing) {
    if (!(spacing > 0.0))
        throw std::invalid_argument("make_grid: spacing must be positive");
    RegionGrid grid;
    grid.spacing = spacing;
    const int half = static_cast<int>(std::ceil(target_region.radius / spacing));
    for (int iy = -half; iy <= half; ++iy) {
        for (int ix = -half; ix <= half; ++ix) {
            const Vec2 p{target_region.center.x + ix * spacing,
                         target_region.center.y + iy * spacing};
            if ((p - target_region.center).norm() > target_region.radius)
                continue;
            if (scatterer && (p - scatterer->center).norm() <= scatterer->radius)
                continue;
            grid.points.push_back(p);
            grid.weights.push_back(spacing * spacing);
        }
    }
    if (grid.points.empty())
        throw std::invalid_argument(
            "make_grid: spacing too large, no points inside the region");
    return grid;
}

InterpolationMatrices interpolation_matrices(const SceneConfig& scene,
                                             const Wavenumber& kw,
                                             const KernelParams& params,
                                             const RegionGrid& grid) {
    if (grid.points.empty())
        throw std::invalid_argument("interpolation_matrices: empty grid");

    const auto G = grid.size();
    const auto L = scene.secondary_sources.size();
    const InterpFilter zx(params, kw, scene.reference_mics);
    const auto R = static_cast<std::size_t>(zx.size());

    CMat Zy(G, L), Zx(G, R);
    Eigen::VectorXd w(G);
    for (std::size_t g = 0; g < G; ++g) {
        Zy.row(g) = secondary_model_zeta(scene, kw, grid.points[g]).transpose();
        Zx.row(g) = zx(grid.points[g]).transpose();
        w(g) = grid.weights[g];
    }

    InterpolationMatrices out;
    out.A_yy = Zy.adjoint() * w.asDiagonal() * Zy;
    out.A_yx = Zy.adjoint() * w.asDiagonal() * Zx;
    out.A_xx = Zx.adjoint() * w.asDiagonal() * Zx;
    // symmetrize away gemm roundoff
    out.A_yy = 0.5 * (out.A_yy + out.A_yy.adjoint()).eval();
    out.A_xx = 0.5 * (out.A_xx + out.A_xx.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<CMat> es(out.A_yy);
    const double emax = es.eigenvalues().cwiseAbs().maxCoeff();
    const double emin = es.eigenvalues().cwiseAbs().minCoeff();
    out.cond_Ayy = emin > 0.0 ? emax / emin
                              : std::numeric_limits<double>::infinity();
    out.gram_cond = zx.condition_number();
    out.lambda = params.lambda;
    out.grid_spacing = grid.spacing;
    out.grid_points = G;
    out.kw = kw;
    return out;
}

double potential_energy(const FieldMap& u, const RegionGrid& grid) {
    if (u.values.size() != grid.size() || u.points.size() != grid.size())
        throw std::invalid_argument(
            "potential_energy: field map not aligned with grid");
    for (std::size_t g = 0; g < grid.size(); ++g)
        if ((u.points[g] - grid.points[g]).norm() > 1e-12)
            throw std::invalid_argument(
                "potential_energy: field map points differ from grid points");

    std::vector<double> re(grid.size()), im(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        re[g] = u.values[g].real();
        im[g] = u.values[g].imag();
    }
    return simd::weighted_abs2_sum(grid.size(), re.data(), im.data(),
                                   grid.weights.data());
}

}  // namespace sfanc
