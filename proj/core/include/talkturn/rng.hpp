#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace talkturn {

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stable per-entity seed derivation. std::hash is not stable across builds,
// so seeds are derived with fixed mixing functions.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
    return splitmix64(seed ^ fnv1a64(name));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t n) {
    return splitmix64(seed ^ splitmix64(n + 0x51ed2701ull));
}

// Uniform in [0,1) with a fixed bit recipe; std::uniform_real_distribution is
// implementation-defined and would break cross-toolchain determinism.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    const int n = hi - lo + 1;
    int k = static_cast<int>(uniform_unit(rng) * n);
    if (k >= n) k = n - 1;
    return lo + k;
}

} // namespace talkturn
