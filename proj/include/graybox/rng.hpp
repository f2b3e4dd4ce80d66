#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace graybox {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Independent stream for (seed, phase, index); adding a phase never shifts
/// another phase's stream.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t phase, std::uint64_t index = 0) {
    return Rng(splitmix64(splitmix64(splitmix64(seed) ^ phase) ^ index));
}

/// Uniform integer in [0, bound), bound > 0. Rejection sampling on the raw
/// engine output keeps sequences identical across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

template <typename T>
void shuffle(Rng& rng, std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace graybox
