#ifndef CORESETS_GEOMETRY_HPP
#define CORESETS_GEOMETRY_HPP

#include <span>
#include <vector>

#include "coresets/point_set.hpp"

namespace coresets {

/// Squared Euclidean distance between two points of equal dimension.
double squared_distance(std::span<const double> p, std::span<const double> q);

/// Weighted k-means cost: sum over points of w(p) * min_c dist^2(p, c).
/// Unnormalized (no 1/n factor).
double clustering_cost(const PointSet& points, const CenterSet& centers);

/// Same cost for a coreset; weights may be negative when clamping was
/// disabled, so the result can be negative.
double clustering_cost(const WeightedCoreset& coreset, const CenterSet& centers);

/// Weighted mean of the selected subset. Throws if the subset is empty or
/// carries zero total weight.
std::vector<double> centroid(const PointSet& points,
                             std::span<const std::size_t> subset);

/// Weighted mean of the whole set.
std::vector<double> centroid(const PointSet& points);

/// Nearest-center labels with squared distances; ties break toward the
/// lowest center index.
Assignment assign(const PointSet& points, const CenterSet& centers);

/// Cost of an assignment (sum of w(p) * sq_dist(p)).
double assignment_cost(const PointSet& points, const Assignment& assignment);

}  // namespace coresets

#endif  // CORESETS_GEOMETRY_HPP
