#include "coresets/group_sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "coresets/geometry.hpp"
#include "coresets/kmeans.hpp"
#include "sampling_util.hpp"

namespace coresets {
namespace detail {

std::vector<std::size_t> largest_remainder(const std::vector<double>& shares,
                                           std::size_t total) {
    const std::size_t n = shares.size();
    std::vector<std::size_t> out(n, 0);
    double sum = 0.0;
    for (double s : shares) sum += std::max(0.0, s);
    if (sum <= 0.0 || total == 0) return out;

    std::size_t assigned = 0;
    std::vector<std::pair<double, std::size_t>> remainders;
    remainders.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double exact = std::max(0.0, shares[i]) / sum * static_cast<double>(total);
        out[i] = static_cast<std::size_t>(std::floor(exact));
        assigned += out[i];
        remainders.emplace_back(-(exact - std::floor(exact)), i);
    }
    std::sort(remainders.begin(), remainders.end());
    for (std::size_t j = 0; assigned < total && j < remainders.size(); ++j) {
        out[remainders[j].second] += 1;
        ++assigned;
    }
    return out;
}

}  // namespace detail

WeightedCoreset group_coreset(const PointSet& points,
                              const std::vector<std::size_t>& bicriteria_idx,
                              const GroupingConfig& cfg) {
    if (cfg.epsilon < 0.0)
        throw std::invalid_argument("group_coreset: epsilon must be >= 0");
    if (cfg.coreset_size < cfg.k)
        throw std::invalid_argument("group_coreset: coreset_size must be >= k");
    if (!(cfg.epsilon_group > 0.0 && cfg.epsilon_group < 1.0))
        throw std::invalid_argument("group_coreset: epsilon_group must be in (0,1)");
    const std::size_t n = points.size();
    const std::size_t T = std::min(cfg.coreset_size, n);
    if (T == 0)
        throw std::invalid_argument("group_coreset: coreset_size must be >= 1");

    Rng rng(mix_seed(cfg.seed, 0x6709ULL));
    const CenterSet centers = centers_from_indices(points, bicriteria_idx);
    const Assignment a = assign(points, centers);

    const std::size_t kb = centers.size();
    std::vector<double> cluster_mass(kb, 0.0);
    std::vector<double> cluster_cost(kb, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cluster_mass[a.labels[i]] += points.weight(i);
        cluster_cost[a.labels[i]] += points.weight(i) * a.sq_dists[i];
    }

    // Ring index per point; cheap points (cost below the snap threshold)
    // stay out of every ring and are carried by their center's correction.
    const std::size_t num_rings = static_cast<std::size_t>(
        std::ceil(2.0 * std::log2(1.0 / cfg.epsilon_group))) + 1;
    std::vector<std::vector<std::size_t>> ring_members(num_rings);
    for (std::size_t i = 0; i < n; ++i) {
        if (points.weight(i) <= 0.0) continue;
        const std::size_t c = a.labels[i];
        if (cluster_mass[c] <= 0.0) continue;
        const double mean_cost = cluster_cost[c] / cluster_mass[c];
        const double threshold = cfg.epsilon_group * mean_cost;
        if (a.sq_dists[i] <= threshold) continue;  // snapped
        double level = std::floor(std::log2(a.sq_dists[i] / threshold));
        if (level < 0.0) level = 0.0;
        std::size_t ring = static_cast<std::size_t>(level);
        if (ring >= num_rings) ring = num_rings - 1;  // outer group
        ring_members[ring].push_back(i);
    }

    std::vector<double> ring_cost(num_rings, 0.0);
    for (std::size_t r = 0; r < num_rings; ++r)
        for (std::size_t i : ring_members[r])
            ring_cost[r] += points.weight(i) * a.sq_dists[i];

    // Split the T-sample budget across rings proportional to ring cost,
    // truncating at ring size and redistributing any surplus.
    std::vector<std::size_t> budget(num_rings, 0);
    {
        std::size_t remaining = T;
        std::vector<bool> saturated(num_rings, false);
        while (remaining > 0) {
            std::vector<double> shares(num_rings, 0.0);
            double active_cost = 0.0;
            for (std::size_t r = 0; r < num_rings; ++r) {
                if (saturated[r] || ring_members[r].empty()) continue;
                shares[r] = ring_cost[r];
                active_cost += ring_cost[r];
            }
            if (active_cost <= 0.0) break;
            auto grant = detail::largest_remainder(shares, remaining);
            std::size_t given = 0;
            for (std::size_t r = 0; r < num_rings; ++r) {
                const std::size_t cap = ring_members[r].size();
                std::size_t g = std::min(grant[r], cap - budget[r]);
                budget[r] += g;
                given += g;
                if (budget[r] == cap) saturated[r] = true;
            }
            if (given == 0) break;
            remaining -= given;
        }
    }

    detail::IndexedCoresetBuilder builder;
    std::vector<double> sampled_mass(kb, 0.0);
    for (std::size_t r = 0; r < num_rings; ++r) {
        if (budget[r] == 0) continue;
        std::vector<double> masses(ring_members[r].size());
        for (std::size_t j = 0; j < masses.size(); ++j) {
            const std::size_t i = ring_members[r][j];
            masses[j] = points.weight(i) * a.sq_dists[i];
        }
        detail::DiscreteSampler sampler(masses);
        if (sampler.total() <= 0.0) continue;
        const double b = static_cast<double>(budget[r]);
        for (std::size_t t = 0; t < budget[r]; ++t) {
            const std::size_t j = sampler.draw(rng);
            const std::size_t i = ring_members[r][j];
            // Pr[i] = masses[j] / total; weight = w(i) / (b * Pr[i]).
            const double u = points.weight(i) * sampler.total() / (b * masses[j]);
            builder.add(i, u);
            sampled_mass[a.labels[i]] += u;
        }
    }

    // Center corrections: snapped mass plus the (1+eps) inflation minus the
    // sampled estimate, exactly as in sensitivity sampling.
    for (std::size_t c = 0; c < kb; ++c) {
        if (cluster_mass[c] <= 0.0) continue;
        double w = (1.0 + cfg.epsilon) * cluster_mass[c] - sampled_mass[c];
        if (cfg.clamp_negative_weights && w < 0.0) w = 0.0;
        if (w != 0.0) builder.add(bicriteria_idx[c], w);
    }
    return builder.build(points);
}

WeightedCoreset group_coreset(const PointSet& points, const GroupingConfig& cfg) {
    Rng rng(cfg.seed);
    const auto bic = bicriteria_indices(points, cfg.k, 2.0, rng);
    return group_coreset(points, bic, cfg);
}

}  // namespace coresets
