#include "coresets/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace coresets {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::size_t Rng::index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::index: n must be >= 1");
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

double Rng::normal() {
    // Polar Box-Muller; second deviate is discarded so that the state
    // consumed per call does not depend on caller history.
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return u * std::sqrt(-2.0 * std::log(s) / s);
}

Rng Rng::split(std::uint64_t stream) const {
    Rng copy = *this;
    std::uint64_t s = copy.next_u64() ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    return Rng(s);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
    std::uint64_t x = seed;
    std::uint64_t h = splitmix64(x);
    x ^= a + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(x);
    x ^= b + 0xbf58476d1ce4e5b9ULL;
    h ^= splitmix64(x);
    x ^= c + 0x94d049bb133111ebULL;
    h ^= splitmix64(x);
    return h;
}

std::size_t sample_discrete(Rng& rng, std::span<const double> masses,
                            double total_mass) {
    if (!(total_mass > 0.0))
        throw std::invalid_argument("sample_discrete: total mass must be positive");
    double target = rng.uniform() * total_mass;
    double acc = 0.0;
    std::size_t last_positive = masses.size();
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (masses[i] <= 0.0) continue;
        acc += masses[i];
        last_positive = i;
        if (target < acc) return i;
    }
    // Rounding can leave target marginally above the accumulated total;
    // fall back to the last positive-mass entry.
    if (last_positive == masses.size())
        throw std::invalid_argument("sample_discrete: no positive mass");
    return last_positive;
}

}  // namespace coresets
