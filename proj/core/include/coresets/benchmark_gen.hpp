#ifndef CORESETS_BENCHMARK_GEN_HPP
#define CORESETS_BENCHMARK_GEN_HPP

#include <optional>
#include <span>
#include <vector>

#include "coresets/point_set.hpp"

namespace coresets {

/// An adversarial instance with alpha planted clusterings: k^alpha points
/// in alpha*k dimensions, entries in {(k-1)/k, -1/k}, every column summing
/// to zero. The alpha planted clusterings are pairwise maximally dissimilar
/// (clustering distance 1 - 1/k), have identical cost, and each is induced
/// by the means of its own clusters.
struct BenchmarkInstance {
    std::size_t k = 0;
    std::size_t alpha = 0;
    Matrix matrix;
    /// planted[a][i] is point i's cluster under the a-th clustering.
    std::vector<std::vector<std::size_t>> planted;

    std::size_t size() const { return matrix.rows; }
    std::size_t dim() const { return matrix.cols; }
    PointSet as_point_set() const { return PointSet(matrix); }
};

/// The k-dimensional block pattern: entry i (1-indexed) is (k-1)/k, all
/// others -1/k. Sums to zero.
std::vector<double> base_vector(std::size_t i, std::size_t k);

/// Generate the instance for k >= 2, alpha >= 2. Column t = a*k + b
/// (a in [0, alpha), b in [1, k]) repeats the Kronecker extension of the
/// b-th base vector k^(alpha-a-1) times; the planted assignment a labels
/// point i by its positive column within block a. Throws when k^alpha *
/// alpha*k exceeds max_entries.
BenchmarkInstance generate_benchmark(std::size_t k, std::size_t alpha,
                                     std::size_t max_entries = (1u << 27));

/// Means of planted clustering a, ordered by cluster label. Each is zero
/// outside coordinate block a and the base vector of its label inside it.
CenterSet planted_centers(const BenchmarkInstance& instance, std::size_t a);

/// Closed form (alpha-1) * k^(alpha-2) * (k-1): the cost of any planted
/// cluster about its own mean.
double planted_cluster_cost(std::size_t k, std::size_t alpha);

/// Confusion-matrix clustering distance: 1 - max over label permutations of
/// the matched overlap fraction, solved exactly by the Hungarian method.
/// 0 for identical clusterings, at most (k-1)/k.
double clustering_distance(std::span<const std::size_t> a,
                           std::span<const std::size_t> b, std::size_t k);

struct CompositeSpec {
    struct Block {
        std::size_t k = 2;
        std::size_t alpha = 2;
    };
    std::vector<Block> blocks;
    /// Translation applied to block i's first own coordinate, times i.
    /// Unset picks 10 times the largest block diameter, which keeps every
    /// inter-block distance above every intra-block one.
    std::optional<double> offset_scale;
};

/// Composite instance: each block embedded in its own coordinate range
/// (total dimension = sum of alpha_i * k_i) and offset along its first own
/// coordinate so blocks do not interfere. A single block reproduces the
/// plain instance.
PointSet composite_benchmark(const CompositeSpec& spec,
                             std::size_t max_entries = (1u << 27));

}  // namespace coresets

#endif  // CORESETS_BENCHMARK_GEN_HPP
