#ifndef CORESETS_SENSITIVITY_SAMPLING_HPP
#define CORESETS_SENSITIVITY_SAMPLING_HPP

#include "coresets/point_set.hpp"
#include "coresets/sampling_config.hpp"

namespace coresets {

/// Sensitivity sampling coreset.
///
/// A 2k-center k-means++ bicriteria solution K partitions the input; each
/// point is scored by dist^2(p, q_i)/cost(K_i) + 1/|K_i| within its cluster
/// K_i, T points are drawn with replacement from the normalized scores and
/// weighted by their inverse sampling probability, and every center q_i is
/// appended with weight (1+eps)|K_i| minus the sampled mass that landed in
/// K_i. Before clamping, the total weight is exactly (1+eps) times the
/// input weight. Duplicate draws are merged.
WeightedCoreset sensitivity_coreset(const PointSet& points,
                                    const SamplingConfig& cfg);

/// Same construction against a caller-supplied bicriteria solution given as
/// input-point indices.
WeightedCoreset sensitivity_coreset(const PointSet& points,
                                    const std::vector<std::size_t>& bicriteria_idx,
                                    const SamplingConfig& cfg);

}  // namespace coresets

#endif  // CORESETS_SENSITIVITY_SAMPLING_HPP
