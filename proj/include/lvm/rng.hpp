#pragma once

#include <cstdint>

namespace lvm {

/// SplitMix64 (Steele, Lea, Flood 2014). Small, fully specified, and used
/// wherever a seed has to be derived from other integers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Seed of Monte Carlo trial t: output number t+1 of SplitMix64 started at
/// seed_base. Depends only on (seed_base, t).
inline std::uint64_t trial_seed(std::uint64_t seed_base, std::uint64_t t) {
    SplitMix64 g(seed_base + t * 0x9E3779B97F4A7C15ull);
    return g();
}

/// Uniform integer in [0, bound) by rejection on the top of the 64-bit range.
/// Unlike std::uniform_int_distribution the result is the same on every
/// standard library.
template <class Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    for (;;) {
        std::uint64_t x = engine();
        if (x <= limit) return x % bound;
    }
}

} // namespace lvm
