#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qfex {

// splitmix64 round, used to stretch (seed, stream) pairs into well-mixed
// engine seeds so that parallel streams never share state.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic engine for (seed, stream). Stream k of seed s is independent
/// of stream k' != k and reproducible across runs and platforms.
inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

/// Uniform double in [0, 1) with 53 random bits. Avoids
/// std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// count angles drawn uniformly from [0, 2*pi).
std::vector<double> uniform_angles(std::size_t count, std::uint64_t seed,
                                   std::uint64_t stream = 0);

}  // namespace qfex
