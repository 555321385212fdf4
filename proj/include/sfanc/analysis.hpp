#pragma once

#include <vector>

#include "sfanc/fieldmap.hpp"

namespace sfanc {

// Per-point 10 log10(|u_e|^2 / mean_j |u_p|^2): the normalized power map.
std::vector<double> normalized_power_db(const FieldMap& total,
                                        const FieldMap& primary);

double median(std::vector<double> v);

// Minimum map value over points within `radius` of `center`; throws when
// no grid point falls inside.
double min_within(const FieldMap& map, const std::vector<double>& values,
                  const Vec2& center, double radius);

}  // namespace sfanc
