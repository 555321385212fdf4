#pragma once

#include <optional>
#include <vector>

#include "sfanc/fieldmap.hpp"
#include "sfanc/kernel.hpp"
#include "sfanc/scene.hpp"

namespace sfanc {

// Midpoint-rule discretization of the target region minus the scatterer:
// a uniform Cartesian lattice, weight = spacing^2 per point.
struct RegionGrid {
    std::vector<Vec2> points;
    std::vector<double> weights;
    double spacing = 0.0;

    std::size_t size() const { return points.size(); }
    double total_weight() const;
};

RegionGrid make_grid(const Disk& target_region,
                     const std::optional<Disk>& scatterer, double spacing);

// The quadratic-form matrices of the estimated potential energy:
//   A_yy = sum_g w_g zeta(r_g)* zeta(r_g)^T   (L x L)
//   A_yx = sum_g w_g zeta(r_g)* z_x(r_g)^T    (L x R)
//   A_xx = sum_g w_g z_x(r_g)* z_x(r_g)^T     (R x R)
struct InterpolationMatrices {
    CMat A_yy, A_yx, A_xx;
    double cond_Ayy = 0.0;
    double gram_cond = 0.0;  // of (K + lambda I) behind z_x
    double lambda = 0.0;
    double grid_spacing = 0.0;
    std::size_t grid_points = 0;
    Wavenumber kw;
};

InterpolationMatrices interpolation_matrices(const SceneConfig& scene,
                                             const Wavenumber& kw,
                                             const KernelParams& params,
                                             const RegionGrid& grid);

// sum_g w_g |u(r_g)|^2. The field map must be aligned with the grid.
double potential_energy(const FieldMap& u, const RegionGrid& grid);

}  // namespace sfanc
