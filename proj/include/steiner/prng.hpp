#pragma once

#include <cstdint>

namespace steiner {

// Deterministic 64-bit PRNG (splitmix64). Every random graph family is a
// pure function of its seed, so generated corpora reproduce bit-for-bit
// across platforms and thread counts. The exact update is documented in
// the README.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) by rejection, avoiding modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw = next();
        while (draw >= limit) draw = next();
        return draw % bound;
    }

    // Bernoulli draw with probability percent/100.
    bool next_percent(unsigned percent) { return next_below(100) < percent; }

private:
    std::uint64_t state_;
};

} // namespace steiner
