#ifndef CORESETS_KMEANS_HPP
#define CORESETS_KMEANS_HPP

#include <cstdint>
#include <vector>

#include "coresets/point_set.hpp"
#include "coresets/rng.hpp"

namespace coresets {

struct SeedConfig {
    std::size_t k = 1;
    /// Greedy over-sampling: candidates drawn per round, best kept.
    std::size_t candidate_pool = 1;
    std::uint64_t seed = 0;
};

/// k-means++ D^2 seeding. The first center is drawn proportional to point
/// weight, each subsequent one proportional to w(p) * D^2(p) against the
/// centers chosen so far. If every D^2 is zero before k centers are chosen,
/// the remaining centers are drawn uniformly from the input (degenerate
/// inputs never fail). Returns the chosen input indices, possibly with
/// repeats on degenerate inputs.
std::vector<std::size_t> kmeanspp_seed_indices(const PointSet& points,
                                               const SeedConfig& cfg, Rng& rng);

CenterSet kmeanspp_seed(const PointSet& points, const SeedConfig& cfg, Rng& rng);
CenterSet kmeanspp_seed(const PointSet& points, const SeedConfig& cfg);

/// Continue an existing D^2 sampling sequence by `extra` more centers, so
/// nested prefixes of one seeding sequence can be evaluated. `centers` is
/// extended in place; `sq_dists` must hold the current D^2 of every point
/// against `centers` and is kept up to date.
void kmeanspp_extend(const PointSet& points, std::vector<std::size_t>& centers,
                     std::vector<double>& sq_dists, std::size_t extra, Rng& rng);

struct LloydResult {
    CenterSet centers;
    double cost = 0.0;
    std::size_t iterations = 0;
};

/// Lloyd's algorithm from the given initialization. Stops when the relative
/// cost improvement falls below rel_tol or after max_iters rounds. Empty
/// clusters are repaired by stealing the point farthest from its assigned
/// center, so k never shrinks. The cost sequence is non-increasing.
LloydResult lloyd(const PointSet& points, const CenterSet& init,
                  std::size_t max_iters = 50, double rel_tol = 1e-6);

/// Bicriteria approximation: ceil(beta * k) centers by k-means++ seeding.
/// `refine_iters` > 0 additionally runs Lloyd on the seeding.
CenterSet bicriteria(const PointSet& points, std::size_t k, double beta, Rng& rng,
                     std::size_t refine_iters = 0);

/// Same, also reporting which input indices were chosen (only valid when
/// refine_iters == 0, the default seeding-only mode).
std::vector<std::size_t> bicriteria_indices(const PointSet& points, std::size_t k,
                                            double beta, Rng& rng);

CenterSet centers_from_indices(const PointSet& points,
                               const std::vector<std::size_t>& indices);

}  // namespace coresets

#endif  // CORESETS_KMEANS_HPP
