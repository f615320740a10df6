#pragma once

#include <cstdint>
#include <random>

namespace rrnht {

/// SplitMix64 mixing step. Used to derive independent stream seeds from one
/// root seed so that every random draw in the toolkit is reproducible.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                                    std::uint64_t index = 0) noexcept {
    return splitmix64(splitmix64(root ^ splitmix64(stream)) ^ index);
}

/// Unbiased draw from [0, bound) by rejection. std::uniform_int_distribution
/// is implementation-defined; this keeps seeded runs bit-identical across
/// platforms (mt19937_64 itself is fully specified by the standard).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

}  // namespace rrnht
