#ifndef CORESETS_RAY_MAKER_HPP
#define CORESETS_RAY_MAKER_HPP

#include <cstdint>

#include "coresets/point_set.hpp"

namespace coresets {

struct RayConfig {
    std::size_t k = 1;
    std::size_t rays_per_center = 1;
    /// Maximum 1D clusters per ray.
    std::size_t per_ray_centers = 1;
    std::uint64_t seed = 0;
    /// A ray holding more points than this is pre-quantized into this many
    /// weighted quantile points before the exact 1D dynamic program.
    std::size_t max_points_per_ray = 5000;
};

/// Snapshot of the internal ray structure, for inspection and tests.
struct RayDiagnostics {
    Matrix centers;
    /// Unit direction of every ray, center-major order.
    std::vector<std::vector<double>> directions;
    /// Index of the center each ray starts at.
    std::vector<std::size_t> ray_center;
    /// Chosen ray, nonnegative projection and residual per input point.
    std::vector<std::size_t> point_ray;
    std::vector<double> point_projection;
    std::vector<double> point_residual_sq;
};

/// Ray Maker coreset: k centers (k-means++ followed by Lloyd) each spawn
/// rays_per_center random unit half-lines; every point snaps to its
/// globally closest ray (distance = residual after the nonnegative
/// projection onto the ray), each ray's projections are partitioned by the
/// exact 1D k-means dynamic program, and every interval emits one coreset
/// point on the ray at the interval mean, weighted by the interval mass.
/// Weights sum to the input's total weight.
WeightedCoreset raymaker_coreset(const PointSet& points, const RayConfig& cfg,
                                 RayDiagnostics* diagnostics = nullptr);

}  // namespace coresets

#endif  // CORESETS_RAY_MAKER_HPP
