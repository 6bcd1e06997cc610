#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace hypercov {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Seed of sub-stream `index` under `seed`:
///   mix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
/// Used for trial t of a sample and for replicate r of a simulation.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Platform-independent generator: std::mt19937_64 (fully specified by the
/// standard) plus a bounded-integer draw and shuffle defined here rather than
/// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound >= 1 (Lemire's multiply-shift
    /// with rejection, so exactly uniform).
    std::uint64_t below(std::uint64_t bound);

    /// Fisher-Yates: for i = size-1 down to 1, swap(v[i], v[below(i+1)]).
    template <typename T>
    void shuffle(std::span<T> v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hypercov
