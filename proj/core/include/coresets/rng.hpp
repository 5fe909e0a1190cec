#ifndef CORESETS_RNG_HPP
#define CORESETS_RNG_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace coresets {

/// Seeded pseudo-random generator (xoshiro256++ seeded via splitmix64).
///
/// Every randomized operation in the library takes one of these by
/// reference; the same seed always reproduces the same sequence, on any
/// platform, independent of the standard library's distribution
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). Requires n >= 1.
    std::size_t index(std::size_t n);

    /// Standard normal deviate (Box-Muller, one value per call).
    double normal();

    /// Derive an independent generator for a named substream.
    Rng split(std::uint64_t stream) const;

private:
    std::uint64_t state_[4];
};

/// Mixes (seed, a, b, c) into a single substream seed. Used to give each
/// experiment record its own deterministic generator regardless of the
/// order records are executed in.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0);

/// One draw from the discrete distribution with the given (unnormalized,
/// nonnegative) masses. Requires a strictly positive total.
std::size_t sample_discrete(Rng& rng, std::span<const double> masses,
                            double total_mass);

}  // namespace coresets

#endif  // CORESETS_RNG_HPP
