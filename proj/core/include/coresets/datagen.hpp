#ifndef CORESETS_DATAGEN_HPP
#define CORESETS_DATAGEN_HPP

#include <cstdint>

#include "coresets/point_set.hpp"

namespace coresets {

/// Synthetic Gaussian mixture for tests and demos: `components` isotropic
/// blobs with uniformly drawn centers, optionally padded with pure-noise
/// dimensions that carry no cluster structure.
struct MixtureConfig {
    std::size_t n = 1000;
    std::size_t dim = 10;
    std::size_t components = 5;
    double center_box = 10.0;
    double stddev = 1.0;
    std::size_t noise_dims = 0;
    double noise_stddev = 1.0;
    std::uint64_t seed = 0;
};

PointSet gaussian_mixture(const MixtureConfig& cfg);

}  // namespace coresets

#endif  // CORESETS_DATAGEN_HPP
