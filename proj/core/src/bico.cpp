#include "coresets/bico.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coresets/geometry.hpp"
#include "coresets/kmeans.hpp"
#include "coresets/rng.hpp"

namespace coresets {

namespace {

constexpr std::size_t kAutoSampleSize = 1000;

}  // namespace

double ClusteringFeature::internal_cost() const {
    if (count <= 0.0) return 0.0;
    double norm_sq = 0.0;
    for (double v : linear_sum) norm_sq += v * v;
    return square_sum - norm_sq / count;
}

std::vector<double> ClusteringFeature::centroid() const {
    std::vector<double> c(linear_sum);
    for (double& v : c) v /= count;
    return c;
}

BicoTree::BicoTree(std::size_t dim, BicoConfig cfg) : dim_(dim), cfg_(std::move(cfg)) {
    if (dim_ == 0) throw std::invalid_argument("BicoTree: dimension must be >= 1");
    if (cfg_.target_size == 0)
        throw std::invalid_argument("BicoTree: target_size must be >= 1");
    if (!(cfg_.rebuild_factor > 1.0))
        throw std::invalid_argument("BicoTree: rebuild_factor must be > 1");
    if (cfg_.initial_threshold) {
        if (!(*cfg_.initial_threshold >= 0.0))
            throw std::invalid_argument("BicoTree: threshold must be >= 0");
        threshold_ = *cfg_.initial_threshold;
        level1_radius_sq_ = threshold_;
        threshold_ready_ = true;
    }
}

void BicoTree::insert(std::span<const double> p, double w) {
    if (p.size() != dim_) throw std::invalid_argument("BicoTree: dimension mismatch");
    total_mass_ += w;
    inserted_count_ += 1.0;
    if (!threshold_ready_) {
        buffer_.emplace_back(std::vector<double>(p.begin(), p.end()), w);
        if (buffer_.size() >= kAutoSampleSize) ensure_threshold();
        return;
    }
    insert_into(roots_, 1, p, w);
    rebuild_if_needed();
}

void BicoTree::ensure_threshold() {
    if (threshold_ready_) return;
    // Movement budget per feature: a 1/T share of a seeding-cost estimate
    // over the buffered prefix.
    double estimate = 0.0;
    if (buffer_.size() > 1) {
        Matrix m(buffer_.size(), dim_);
        std::vector<double> ws(buffer_.size());
        for (std::size_t i = 0; i < buffer_.size(); ++i) {
            std::copy(buffer_[i].first.begin(), buffer_[i].first.end(),
                      m.row(i).begin());
            ws[i] = buffer_[i].second;
        }
        PointSet sample(std::move(m), std::move(ws));
        SeedConfig seed_cfg;
        seed_cfg.k = std::min(cfg_.threshold_estimate_k, sample.size());
        Rng rng(mix_seed(cfg_.seed, 0xb1c0ULL));
        const CenterSet seeds = kmeanspp_seed(sample, seed_cfg, rng);
        estimate = clustering_cost(sample, seeds);
    }
    threshold_ = estimate / static_cast<double>(cfg_.target_size);
    level1_radius_sq_ = threshold_;
    threshold_ready_ = true;

    auto pending = std::move(buffer_);
    buffer_.clear();
    for (const auto& [pt, w] : pending) {
        insert_into(roots_, 1, pt, w);
        rebuild_if_needed();
    }
}

void BicoTree::insert_into(std::vector<ClusteringFeature>& nodes, std::size_t level,
                           std::span<const double> p, double w) {
    // Radii halve per level: R_i^2 = R_1^2 / 4^(i-1).
    const double radius_sq =
        level1_radius_sq_ / std::pow(4.0, static_cast<double>(level - 1));

    std::size_t nearest = nodes.size();
    double nearest_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double d = squared_distance(p, nodes[i].reference);
        if (d < nearest_d) {
            nearest_d = d;
            nearest = i;
        }
    }

    if (nearest == nodes.size() || nearest_d > radius_sq) {
        ClusteringFeature cf;
        cf.count = w;
        cf.linear_sum.assign(p.begin(), p.end());
        for (double& v : cf.linear_sum) v *= w;
        double sq = 0.0;
        for (double v : p) sq += v * v;
        cf.square_sum = w * sq;
        cf.reference.assign(p.begin(), p.end());
        cf.level = level;
        nodes.push_back(std::move(cf));
        return;
    }

    ClusteringFeature& q = nodes[nearest];
    double p_sq = 0.0;
    for (double v : p) p_sq += v * v;
    const double new_count = q.count + w;
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
        const double s = q.linear_sum[j] + w * p[j];
        norm_sq += s * s;
    }
    const double new_cost = q.square_sum + w * p_sq - norm_sq / new_count;
    if (new_cost <= threshold_) {
        q.count = new_count;
        for (std::size_t j = 0; j < dim_; ++j) q.linear_sum[j] += w * p[j];
        q.square_sum += w * p_sq;
        return;
    }
    insert_into(q.children, level + 1, p, w);
}

namespace {

std::size_t count_features(const std::vector<ClusteringFeature>& nodes) {
    std::size_t total = nodes.size();
    for (const auto& cf : nodes) total += count_features(cf.children);
    return total;
}

double sum_internal_cost(const std::vector<ClusteringFeature>& nodes) {
    double total = 0.0;
    for (const auto& cf : nodes)
        total += cf.internal_cost() + sum_internal_cost(cf.children);
    return total;
}

}  // namespace

std::size_t BicoTree::feature_count() const { return count_features(roots_); }

double BicoTree::total_internal_cost() const { return sum_internal_cost(roots_); }

void BicoTree::collect_references(
    const std::vector<ClusteringFeature>& nodes,
    std::vector<std::pair<std::vector<double>, double>>& out) const {
    for (const auto& cf : nodes) {
        out.emplace_back(cf.reference, cf.count);
        collect_references(cf.children, out);
    }
}

void BicoTree::rebuild_if_needed() {
    // The tree must stay a genuine summary even when the target size rivals
    // the stream length: beyond a small floor, keep at most half as many
    // features as points seen. At production scale (T much smaller than n)
    // the rebuild_factor * T cap is the binding one, as in the reference
    // scheme.
    const double summary_cap = std::max(64.0, 0.5 * inserted_count_);
    const double cap = std::min(
        cfg_.rebuild_factor * static_cast<double>(cfg_.target_size), summary_cap);
    while (static_cast<double>(feature_count()) > cap) {
        std::vector<std::pair<std::vector<double>, double>> refs;
        collect_references(roots_, refs);
        if (threshold_ > 0.0) {
            threshold_ *= 2.0;
        } else {
            // A zero estimate (flat prefix) needs a data-driven restart:
            // the smallest positive reference separation.
            double min_sq = std::numeric_limits<double>::infinity();
            const std::size_t scan = std::min<std::size_t>(refs.size(), 512);
            for (std::size_t i = 0; i < scan; ++i)
                for (std::size_t j = i + 1; j < scan; ++j) {
                    const double d = squared_distance(refs[i].first, refs[j].first);
                    if (d > 0.0 && d < min_sq) min_sq = d;
                }
            threshold_ = std::isfinite(min_sq) ? min_sq : 1.0;
        }
        level1_radius_sq_ = threshold_;
        roots_.clear();
        for (const auto& [pt, w] : refs) insert_into(roots_, 1, pt, w);
    }
}

WeightedCoreset BicoTree::finalize() {
    if (total_mass_ <= 0.0 && buffer_.empty() && roots_.empty())
        throw std::logic_error("BicoTree::finalize: no insertions");
    // A short stream may still be buffered awaiting the threshold estimate.
    ensure_threshold();

    std::vector<const ClusteringFeature*> features;
    std::vector<const ClusteringFeature*> stack;
    for (const auto& cf : roots_) stack.push_back(&cf);
    while (!stack.empty()) {
        const ClusteringFeature* cf = stack.back();
        stack.pop_back();
        features.push_back(cf);
        for (const auto& child : cf->children) stack.push_back(&child);
    }

    Matrix pts(features.size(), dim_);
    std::vector<double> weights(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto c = features[i]->centroid();
        std::copy(c.begin(), c.end(), pts.row(i).begin());
        weights[i] = features[i]->count;
    }
    return WeightedCoreset{std::move(pts), std::move(weights), std::nullopt};
}

WeightedCoreset bico_coreset(const PointSet& points, const BicoConfig& cfg) {
    BicoTree tree(points.dim(), cfg);
    for (std::size_t i = 0; i < points.size(); ++i)
        tree.insert(points.point(i), points.weight(i));
    return tree.finalize();
}

}  // namespace coresets
