#include "coresets/stream_kmpp.hpp"

#include <stdexcept>
#include <unordered_set>

#include "coresets/geometry.hpp"
#include "coresets/kmeans.hpp"

namespace coresets {

WeightedCoreset streamkmpp_coreset(const PointSet& points, std::size_t T,
                                   Rng& rng) {
    const std::size_t n = points.size();
    if (T == 0) throw std::invalid_argument("streamkmpp_coreset: T must be >= 1");
    T = std::min(T, n);

    SeedConfig cfg;
    cfg.k = T;
    std::vector<std::size_t> picked = kmeanspp_seed_indices(points, cfg, rng);

    // Degenerate inputs can repeat an index; keep first occurrences.
    std::vector<std::size_t> indices;
    indices.reserve(picked.size());
    std::unordered_set<std::size_t> seen;
    for (std::size_t i : picked)
        if (seen.insert(i).second) indices.push_back(i);

    const CenterSet centers = centers_from_indices(points, indices);
    const Assignment a = assign(points, centers);
    std::vector<double> mass(indices.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) mass[a.labels[i]] += points.weight(i);

    // Coordinate twins can strand a center with zero mass; drop those.
    Matrix pts(indices.size(), points.dim());
    std::vector<double> weights;
    std::vector<std::size_t> sources;
    std::size_t r = 0;
    for (std::size_t c = 0; c < indices.size(); ++c) {
        if (mass[c] <= 0.0) continue;
        const auto p = points.point(indices[c]);
        std::copy(p.begin(), p.end(), pts.row(r).begin());
        weights.push_back(mass[c]);
        sources.push_back(indices[c]);
        ++r;
    }
    pts.rows = r;
    pts.data.resize(r * points.dim());
    return WeightedCoreset{std::move(pts), std::move(weights), std::move(sources)};
}

WeightedCoreset streamkmpp_coreset(const PointSet& points, std::size_t T,
                                   std::uint64_t seed) {
    Rng rng(seed);
    return streamkmpp_coreset(points, T, rng);
}

}  // namespace coresets
