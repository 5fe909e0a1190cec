#ifndef CORESETS_MEB_HPP
#define CORESETS_MEB_HPP

#include <vector>

#include "coresets/point_set.hpp"

namespace coresets {

struct Ball {
    std::vector<double> center;
    double radius = 0.0;
};

/// Approximate minimum enclosing ball. Starts at the centroid and moves a
/// 1/(t+1) fraction toward the farthest point each round; the returned
/// radius is the true maximum distance from the final center, so the ball
/// always encloses the input.
Ball approx_meb(const PointSet& points, std::size_t iters = 100);

}  // namespace coresets

#endif  // CORESETS_MEB_HPP
