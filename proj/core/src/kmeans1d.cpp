#include "coresets/kmeans1d.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace coresets {

Kmeans1DResult optimal_1d_kmeans(std::span<const double> values,
                                 std::span<const double> weights, std::size_t g) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("optimal_1d_kmeans: empty input");
    if (weights.size() != n)
        throw std::invalid_argument("optimal_1d_kmeans: weight count mismatch");
    if (g == 0) throw std::invalid_argument("optimal_1d_kmeans: g must be >= 1");
    if (!std::is_sorted(values.begin(), values.end()))
        throw std::invalid_argument("optimal_1d_kmeans: values must be sorted");
    g = std::min(g, n);

    // Prefix sums of w, w*x, w*x^2; interval cost in O(1).
    std::vector<double> pw(n + 1, 0.0), ps(n + 1, 0.0), pq(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        pw[i + 1] = pw[i] + weights[i];
        ps[i + 1] = ps[i] + weights[i] * values[i];
        pq[i + 1] = pq[i] + weights[i] * values[i] * values[i];
    }
    auto interval_cost = [&](std::size_t lo, std::size_t hi) {
        // [lo, hi) half-open
        const double w = pw[hi] - pw[lo];
        if (w <= 0.0) return 0.0;
        const double s = ps[hi] - ps[lo];
        const double q = pq[hi] - pq[lo];
        return std::max(0.0, q - s * s / w);
    };

    const double inf = std::numeric_limits<double>::infinity();
    // dp[m][j]: min cost of covering the first j points with m intervals.
    std::vector<std::vector<double>> dp(g + 1, std::vector<double>(n + 1, inf));
    std::vector<std::vector<std::size_t>> from(g + 1,
                                               std::vector<std::size_t>(n + 1, 0));
    dp[0][0] = 0.0;
    for (std::size_t m = 1; m <= g; ++m) {
        dp[m][0] = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (dp[m - 1][i] == inf) continue;
                const double c = dp[m - 1][i] + interval_cost(i, j);
                if (c < dp[m][j]) {
                    dp[m][j] = c;
                    from[m][j] = i;
                }
            }
        }
    }

    // The optimum over at most g intervals; fewer intervals can never help
    // but dp[g][n] already dominates since empty-prefix splits are allowed
    // via dp[m][0] = 0 -> first interval may start anywhere. Backtrack drops
    // zero-length intervals.
    Kmeans1DResult out;
    out.cost = dp[g][n];
    std::vector<std::size_t> cuts;
    std::size_t j = n;
    for (std::size_t m = g; m > 0; --m) {
        const std::size_t i = from[m][j];
        if (i != j) cuts.push_back(i);
        j = i;
    }
    std::sort(cuts.begin(), cuts.end());
    out.boundaries.push_back(0);
    for (std::size_t c : cuts)
        if (c != 0) out.boundaries.push_back(c);
    out.boundaries.push_back(n);

    for (std::size_t b = 0; b + 1 < out.boundaries.size(); ++b) {
        const std::size_t lo = out.boundaries[b], hi = out.boundaries[b + 1];
        const double w = pw[hi] - pw[lo];
        const double s = ps[hi] - ps[lo];
        // Zero-weight interval: take the unweighted midpoint.
        out.centers.push_back(w > 0.0 ? s / w
                                      : 0.5 * (values[lo] + values[hi - 1]));
    }
    return out;
}

}  // namespace coresets
