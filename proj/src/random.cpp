#include "tttest/random.hpp"

namespace ttt {

std::uint64_t hash_label(std::string_view label) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng Rng::substream(std::uint64_t seed, std::initializer_list<std::uint64_t> key) {
    std::uint64_t state = mix64(seed);
    for (const auto k : key) state = mix64(state ^ mix64(k + 0x632be59bd9b4e019ULL));
    return Rng(state);
}

std::size_t Rng::uniform_index(std::size_t n) {
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % bound);
}

}  // namespace ttt
