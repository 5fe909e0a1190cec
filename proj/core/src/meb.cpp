#include "coresets/meb.hpp"

#include <cmath>
#include <stdexcept>

#include "coresets/geometry.hpp"

namespace coresets {

namespace {

std::size_t farthest_point(const PointSet& points,
                           const std::vector<double>& center, double* dist_sq) {
    std::size_t best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double d = squared_distance(points.point(i), center);
        if (d > best_d) {
            best_d = d;
            best = i;
        }
    }
    if (dist_sq) *dist_sq = best_d;
    return best;
}

}  // namespace

Ball approx_meb(const PointSet& points, std::size_t iters) {
    if (iters == 0) throw std::invalid_argument("approx_meb: iters must be >= 1");
    std::vector<double> center = centroid(points);
    for (std::size_t t = 1; t <= iters; ++t) {
        const std::size_t far = farthest_point(points, center, nullptr);
        const auto p = points.point(far);
        const double step = 1.0 / static_cast<double>(t + 1);
        for (std::size_t j = 0; j < center.size(); ++j)
            center[j] += step * (p[j] - center[j]);
    }
    double max_sq = 0.0;
    farthest_point(points, center, &max_sq);
    return Ball{std::move(center), std::sqrt(max_sq)};
}

}  // namespace coresets
