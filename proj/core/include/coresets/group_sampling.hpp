#ifndef CORESETS_GROUP_SAMPLING_HPP
#define CORESETS_GROUP_SAMPLING_HPP

#include "coresets/point_set.hpp"
#include "coresets/sampling_config.hpp"

namespace coresets {

/// Group sampling coreset.
///
/// After a 2k-center bicriteria solution, points cheaper than
/// epsilon_group times their cluster's mean cost are snapped to the cluster
/// center; the rest are binned into cost rings doubling from that
/// threshold, the sample budget is split across rings proportional to ring
/// cost, and within a ring points are drawn proportional to cost with
/// inverse-probability weights. Center mass corrections keep the pre-clamp
/// total weight at exactly (1+eps) times the input weight.
WeightedCoreset group_coreset(const PointSet& points, const GroupingConfig& cfg);

/// Same construction against a caller-supplied bicriteria solution.
WeightedCoreset group_coreset(const PointSet& points,
                              const std::vector<std::size_t>& bicriteria_idx,
                              const GroupingConfig& cfg);

}  // namespace coresets

#endif  // CORESETS_GROUP_SAMPLING_HPP
