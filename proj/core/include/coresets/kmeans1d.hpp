#ifndef CORESETS_KMEANS1D_HPP
#define CORESETS_KMEANS1D_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace coresets {

struct Kmeans1DResult {
    /// Interval boundaries as indices into the input: interval i covers
    /// [boundaries[i], boundaries[i+1]). boundaries.front() == 0,
    /// boundaries.back() == n.
    std::vector<std::size_t> boundaries;
    /// Weighted mean of each interval.
    std::vector<double> centers;
    double cost = 0.0;
};

/// Exact minimum-cost weighted 1D k-means partition into at most g
/// contiguous intervals, by dynamic programming over prefix sums
/// (O(g * n^2)). Values must be sorted ascending. g >= n degenerates to one
/// point per interval at cost 0.
Kmeans1DResult optimal_1d_kmeans(std::span<const double> values,
                                 std::span<const double> weights, std::size_t g);

}  // namespace coresets

#endif  // CORESETS_KMEANS1D_HPP
