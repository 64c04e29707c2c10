#include "fcs/prng.hpp"

#include <stdexcept>

namespace fcs {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// One splitmix64 step applied to x.
std::uint64_t mix(std::uint64_t x) {
    std::uint64_t z = x + kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
    const std::uint64_t out = mix(state_);
    state_ += kGamma;
    return out;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("next_below requires bound >= 1");
    }
    // reject the bottom (2^64 mod bound) values to keep the draw unbiased
    const std::uint64_t cutoff = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= cutoff) return x % bound;
    }
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t role) {
    return mix(mix(mix(seed) ^ trial) ^ role);
}

}  // namespace fcs
