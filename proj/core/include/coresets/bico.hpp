#ifndef CORESETS_BICO_HPP
#define CORESETS_BICO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coresets/point_set.hpp"

namespace coresets {

/// BIRCH-style clustering feature: enough statistics to absorb points in
/// O(d) and read off the centroid and the internal (within-feature) cost.
struct ClusteringFeature {
    double count = 0.0;               // weighted mass
    std::vector<double> linear_sum;   // sum of w * p
    double square_sum = 0.0;          // sum of w * ||p||^2
    std::vector<double> reference;    // representative opening the feature
    std::size_t level = 1;
    std::vector<ClusteringFeature> children;

    /// square_sum - ||linear_sum||^2 / count; the cost of the absorbed mass
    /// about its own centroid.
    double internal_cost() const;
    std::vector<double> centroid() const;
};

struct BicoConfig {
    std::size_t target_size = 1;
    /// Cost cap per feature; unset selects the automatic estimate (k-means++
    /// seeding cost over an up-to-1000-point prefix sample, divided by the
    /// target size).
    std::optional<double> initial_threshold;
    double rebuild_factor = 2.0;
    /// Center count for the automatic threshold estimate.
    std::size_t threshold_estimate_k = 10;
    std::uint64_t seed = 0;
};

/// Streaming BICO summarizer. Points arrive one at a time; a hierarchical
/// feature tree absorbs each point into the nearest feature whose internal
/// cost stays below the threshold, opening new features (with radii halving
/// per level) otherwise. When the feature count exceeds the allowance —
/// rebuild_factor * target_size, or half the points seen when that is
/// smaller, so the tree stays a genuine summary even for large targets —
/// the threshold doubles and the tree is rebuilt from the weighted feature
/// references.
class BicoTree {
public:
    BicoTree(std::size_t dim, BicoConfig cfg);

    void insert(std::span<const double> p, double w = 1.0);

    /// One coreset point per feature, at the feature centroid, weighted by
    /// the feature mass. Requires at least one insertion. Flushes any
    /// buffered prefix still awaiting the automatic threshold estimate.
    WeightedCoreset finalize();

    std::size_t feature_count() const;
    double threshold() const { return threshold_; }
    double total_mass() const { return total_mass_; }
    /// Sum of per-feature internal costs; at most feature_count() times the
    /// threshold by the absorb rule.
    double total_internal_cost() const;

private:
    void insert_into(std::vector<ClusteringFeature>& nodes, std::size_t level,
                     std::span<const double> p, double w);
    void ensure_threshold();
    void rebuild_if_needed();
    void collect_references(const std::vector<ClusteringFeature>& nodes,
                            std::vector<std::pair<std::vector<double>, double>>& out) const;

    std::size_t dim_;
    BicoConfig cfg_;
    double threshold_ = 0.0;
    double level1_radius_sq_ = 0.0;
    bool threshold_ready_ = false;
    double total_mass_ = 0.0;
    double inserted_count_ = 0.0;
    std::vector<ClusteringFeature> roots_;
    std::vector<std::pair<std::vector<double>, double>> buffer_;
};

/// Convenience wrapper: stream a whole point set through a BicoTree.
WeightedCoreset bico_coreset(const PointSet& points, const BicoConfig& cfg);

}  // namespace coresets

#endif  // CORESETS_BICO_HPP
