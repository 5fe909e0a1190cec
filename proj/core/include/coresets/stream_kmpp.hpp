#ifndef CORESETS_STREAM_KMPP_HPP
#define CORESETS_STREAM_KMPP_HPP

#include <cstdint>

#include "coresets/point_set.hpp"
#include "coresets/rng.hpp"

namespace coresets {

/// StreamKM++-style coreset: run k-means++ D^2 sampling for T rounds and
/// weight every chosen point by the input mass closest to it (ties to the
/// lowest index). Weights sum to the input's total weight exactly. T above
/// n is capped at n; duplicate picks on degenerate inputs are merged.
WeightedCoreset streamkmpp_coreset(const PointSet& points, std::size_t T,
                                   Rng& rng);
WeightedCoreset streamkmpp_coreset(const PointSet& points, std::size_t T,
                                   std::uint64_t seed);

}  // namespace coresets

#endif  // CORESETS_STREAM_KMPP_HPP
