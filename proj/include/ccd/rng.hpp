#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ccd::rng {

// std::uniform_int_distribution and std::shuffle are implementation-defined, so
// permutations are drawn with explicit integer arithmetic on mt19937_64 output.
// That keeps results identical across standard libraries for a given seed.

inline constexpr const char* kGeneratorFamily = "mt19937_64, streams seeded by splitmix64(seed, stream)";

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Independent stream seed for (seed, stream); used for per-year and per-region streams.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ull));
}

using Engine = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t bounded(Engine& engine, std::uint64_t bound) {
    const std::uint64_t limit = Engine::max() - (Engine::max() % bound + 1) % bound;
    std::uint64_t r;
    do {
        r = engine();
    } while (r > limit);
    return r % bound;
}

/// Fisher-Yates shuffle of the first `count` positions: afterwards items[0..count)
/// is a uniform random draw without replacement from the whole span.
template <class T>
void partial_shuffle(Engine& engine, std::span<T> items, std::size_t count) {
    const std::size_t n = items.size();
    for (std::size_t k = 0; k < count && k + 1 < n; ++k) {
        const std::size_t pick = k + static_cast<std::size_t>(bounded(engine, n - k));
        std::swap(items[k], items[pick]);
    }
}

template <class T>
void shuffle(Engine& engine, std::span<T> items) {
    partial_shuffle(engine, items, items.size());
}

}  // namespace ccd::rng
