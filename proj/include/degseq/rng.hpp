#ifndef DEGSEQ_RNG_HPP
#define DEGSEQ_RNG_HPP

#include <cstdint>
#include <random>

namespace degseq {

using Rng = std::mt19937_64;

// splitmix64 finalizer; derives independent per-trial seeds from a base seed
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// uniform in [0, bound), bound >= 1; rejection sampling keeps it exact
inline std::uint64_t next_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// uniform integer in [lo, hi] inclusive
inline int next_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// uniform double in [0, 1)
inline double next_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace degseq

#endif
