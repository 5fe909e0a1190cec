#ifndef CORESETS_SAMPLING_CONFIG_HPP
#define CORESETS_SAMPLING_CONFIG_HPP

#include <cstdint>

namespace coresets {

struct SamplingConfig {
    std::size_t k = 1;
    /// Target coreset size T. Values above n are capped at n (a coreset
    /// larger than the data is the data).
    std::size_t coreset_size = 1;
    /// Weight inflation (1 + epsilon) applied to the bicriteria-center mass
    /// corrections. 0 keeps the total coreset weight equal to the input's.
    double epsilon = 0.0;
    /// Negative center corrections are clamped to 0 unless disabled.
    bool clamp_negative_weights = true;
    std::uint64_t seed = 0;
};

struct GroupingConfig : SamplingConfig {
    /// Ring resolution in (0, 1): points cheaper than epsilon_group times
    /// their cluster's mean cost are snapped to the cluster center.
    double epsilon_group = 0.1;
};

}  // namespace coresets

#endif  // CORESETS_SAMPLING_CONFIG_HPP
