#include "sfanc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sfanc {

std::vector<double> normalized_power_db(const FieldMap& total,
                                        const FieldMap& primary) {
    if (total.values.size() != primary.values.size())
        throw std::invalid_argument("normalized_power_db: size mismatch");
    double mean_p = 0.0;
    for (const auto& v : primary.values) mean_p += std::norm(v);
    mean_p /= static_cast<double>(primary.values.size());
    std::vector<double> out(total.values.size());
    for (std::size_t i = 0; i < total.values.size(); ++i) {
        const double ratio = std::norm(total.values[i]) / mean_p;
        out[i] = 10.0 * std::log10(std::max(ratio, 1e-20));
    }
    return out;
}

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median: empty");
    const auto mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    if (v.size() % 2 == 1) return v[mid];
    const double hi = v[mid];
    const double lo = *std::max_element(v.begin(), v.begin() + mid);
    return 0.5 * (lo + hi);
}

double min_within(const FieldMap& map, const std::vector<double>& values,
                  const Vec2& center, double radius) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < map.points.size(); ++i)
        if ((map.points[i] - center).norm() <= radius)
            best = std::min(best, values[i]);
    if (!std::isfinite(best) && best > 0)
        throw std::invalid_argument("min_within: no grid point in range");
    return best;
}

}  // namespace sfanc
