#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace ttt {

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stable 64-bit FNV-1a hash, used to key substreams by names.
[[nodiscard]] std::uint64_t hash_label(std::string_view label) noexcept;

/**
 * 64-bit generator with substreams keyed by (seed, key...). Replicate k of a
 * bootstrap run always draws from substream(seed, {k}), so the draws do not
 * depend on how replicates are scheduled across workers.
 */
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    [[nodiscard]] static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> key);

    result_type operator()() { return engine_(); }
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    /// Uniform on [0, 1) with 53 random bits.
    [[nodiscard]] double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on {0, ..., n - 1}; n >= 1.
    [[nodiscard]] std::size_t uniform_index(std::size_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace ttt
