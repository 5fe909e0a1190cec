#include "coresets/sensitivity_sampling.hpp"

#include <stdexcept>

#include "coresets/geometry.hpp"
#include "coresets/kmeans.hpp"
#include "sampling_util.hpp"

namespace coresets {

WeightedCoreset sensitivity_coreset(const PointSet& points,
                                    const std::vector<std::size_t>& bicriteria_idx,
                                    const SamplingConfig& cfg) {
    if (cfg.epsilon < 0.0)
        throw std::invalid_argument("sensitivity_coreset: epsilon must be >= 0");
    if (cfg.coreset_size < cfg.k)
        throw std::invalid_argument("sensitivity_coreset: coreset_size must be >= k");
    const std::size_t n = points.size();
    const std::size_t T = std::min(cfg.coreset_size, n);
    if (T == 0)
        throw std::invalid_argument("sensitivity_coreset: coreset_size must be >= 1");

    Rng rng(mix_seed(cfg.seed, 0x5e5ULL));
    const CenterSet centers = centers_from_indices(points, bicriteria_idx);
    const Assignment a = assign(points, centers);

    const std::size_t kb = centers.size();
    std::vector<double> cluster_mass(kb, 0.0);
    std::vector<double> cluster_cost(kb, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cluster_mass[a.labels[i]] += points.weight(i);
        cluster_cost[a.labels[i]] += points.weight(i) * a.sq_dists[i];
    }

    // Score per point: cost share within its cluster plus a uniform share.
    // A zero-cost cluster contributes only the uniform term.
    std::vector<double> scores(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = a.labels[i];
        double s = points.weight(i) / cluster_mass[c];
        if (cluster_cost[c] > 0.0)
            s += points.weight(i) * a.sq_dists[i] / cluster_cost[c];
        scores[i] = s;
    }

    detail::DiscreteSampler sampler(scores);
    const double z = sampler.total();

    detail::IndexedCoresetBuilder builder;
    std::vector<double> sampled_mass(kb, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
        const std::size_t i = sampler.draw(rng);
        // Inverse-probability weight: Pr[i] = scores[i] / z.
        const double u = points.weight(i) * z /
                         (static_cast<double>(T) * scores[i]);
        builder.add(i, u);
        sampled_mass[a.labels[i]] += u;
    }

    for (std::size_t c = 0; c < kb; ++c) {
        if (cluster_mass[c] <= 0.0) continue;  // center lost every point to a twin
        double w = (1.0 + cfg.epsilon) * cluster_mass[c] - sampled_mass[c];
        if (cfg.clamp_negative_weights && w < 0.0) w = 0.0;
        if (w != 0.0) builder.add(bicriteria_idx[c], w);
    }
    return builder.build(points);
}

WeightedCoreset sensitivity_coreset(const PointSet& points,
                                    const SamplingConfig& cfg) {
    Rng rng(cfg.seed);
    const auto bic = bicriteria_indices(points, cfg.k, 2.0, rng);
    return sensitivity_coreset(points, bic, cfg);
}

}  // namespace coresets
