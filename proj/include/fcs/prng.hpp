// Deterministic pseudorandom streams (splitmix64).
//
// Every random draw in the library comes from a stream keyed by
// (seed, trial index, stream role), so trials are reproducible
// bit-for-bit regardless of evaluation order or platform.

#pragma once

#include <cstdint>

namespace fcs {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform draw in [0, bound) via rejection sampling; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

/// Seed for the sub-stream identified by (seed, trial, role).
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t role);

// Stream roles. Distinct roles give independent streams even under one seed.
inline constexpr std::uint64_t kRoleWitnessDraw = 0;
inline constexpr std::uint64_t kRoleCommitmentChannel = 1;
inline constexpr std::uint64_t kRoleEncodedChannel = 2;
inline constexpr std::uint64_t kRoleWitnessChannel = 3;
inline constexpr std::uint64_t kRoleSweep = 4;

}  // namespace fcs
