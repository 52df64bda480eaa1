// rng.hpp - deterministic seeded randomness: keyed (counter-based) draws and
// sequential streams. Every stochastic routine in the library derives its
// randomness from a 64-bit seed through these functions, so results are
// reproducible bit-for-bit regardless of thread count or execution order.
#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace hyperim::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Fold one word into a seed. Chain calls to derive keys from (seed, coords...).
constexpr std::uint64_t combine(std::uint64_t seed, std::uint64_t word) noexcept {
    return mix64(seed + kGolden * (word + 1));
}

constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t a) noexcept {
    return combine(seed, a);
}
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
    return combine(combine(seed, a), b);
}
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                               std::uint64_t c) noexcept {
    return combine(combine(combine(seed, a), b), c);
}
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                               std::uint64_t c, std::uint64_t d) noexcept {
    return combine(combine(combine(combine(seed, a), b), c), d);
}

// Stateless draws addressed by a key. The key must not be reused across roles;
// callers bake a role constant into the derivation chain.
inline std::uint64_t keyed_u64(std::uint64_t key, std::uint64_t counter = 0) noexcept {
    return combine(key, counter);
}

inline double keyed_unit(std::uint64_t key) noexcept {
    return static_cast<double>(keyed_u64(key) >> 11) * 0x1.0p-53;
}

inline bool keyed_coin(std::uint64_t key, double p) noexcept {
    return keyed_unit(key) < p;
}

// Unbiased integer in [0, bound) via rejection over an internal counter.
inline std::uint64_t keyed_below(std::uint64_t key, std::uint64_t bound) noexcept {
    assert(bound > 0);
    const std::uint64_t threshold = (0 - bound) % bound;
    for (std::uint64_t c = 0;; ++c) {
        const std::uint64_t x = keyed_u64(key, c);
        if (x >= threshold)
            return x % bound;
    }
}

// Sequential generator for code that consumes randomness in a fixed serial
// order (generators, pair sampling). mt19937_64 is fully specified by the
// standard, so streams replay identically everywhere.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(mix64(seed + kGolden)) {}

    std::uint64_t next() { return engine_(); }

    std::uint64_t below(std::uint64_t bound) {
        assert(bound > 0);
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold)
                return x % bound;
        }
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace hyperim::rng
