#ifndef CORESETS_SRC_SAMPLING_UTIL_HPP
#define CORESETS_SRC_SAMPLING_UTIL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "coresets/point_set.hpp"
#include "coresets/rng.hpp"

namespace coresets::detail {

/// Fixed discrete distribution with O(log n) draws via the cumulative sum.
class DiscreteSampler {
public:
    explicit DiscreteSampler(std::span<const double> masses) {
        cumulative_.reserve(masses.size());
        double acc = 0.0;
        for (double m : masses) {
            acc += std::max(0.0, m);
            cumulative_.push_back(acc);
        }
        total_ = acc;
    }

    double total() const { return total_; }

    std::size_t draw(Rng& rng) const {
        const double target = rng.uniform() * total_;
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
        std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
        if (i >= cumulative_.size()) i = cumulative_.size() - 1;
        return i;
    }

private:
    std::vector<double> cumulative_;
    double total_ = 0.0;
};

/// Accumulates (input index -> weight), merging duplicates, then emits a
/// WeightedCoreset in ascending index order with source tracking.
class IndexedCoresetBuilder {
public:
    void add(std::size_t index, double weight) { weights_[index] += weight; }

    bool contains(std::size_t index) const { return weights_.count(index) > 0; }

    WeightedCoreset build(const PointSet& points) const {
        std::size_t m = 0;
        for (const auto& [idx, w] : weights_)
            if (w != 0.0) ++m;
        Matrix pts(std::max<std::size_t>(m, 1), points.dim());
        std::vector<double> ws;
        std::vector<std::size_t> sources;
        ws.reserve(m);
        sources.reserve(m);
        std::size_t r = 0;
        for (const auto& [idx, w] : weights_) {
            if (w == 0.0) continue;
            const auto p = points.point(idx);
            std::copy(p.begin(), p.end(), pts.row(r).begin());
            ws.push_back(w);
            sources.push_back(idx);
            ++r;
        }
        if (r == 0) {
            // Everything cancelled to zero; keep one zero-weight point so the
            // coreset stays well-formed.
            const auto p = points.point(weights_.begin()->first);
            std::copy(p.begin(), p.end(), pts.row(0).begin());
            ws.push_back(0.0);
            sources.push_back(weights_.begin()->first);
            r = 1;
        }
        pts.rows = r;
        pts.data.resize(r * points.dim());
        return WeightedCoreset{std::move(pts), std::move(ws), std::move(sources)};
    }

private:
    std::map<std::size_t, double> weights_;
};

/// Largest-remainder rounding of `shares` (nonnegative reals) to integers
/// summing to `total`. Ties break toward lower indices.
std::vector<std::size_t> largest_remainder(const std::vector<double>& shares,
                                           std::size_t total);

}  // namespace coresets::detail

#endif  // CORESETS_SRC_SAMPLING_UTIL_HPP
