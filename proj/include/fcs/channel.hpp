// Transmission models and empirical acceptance measurement.
//
// Three channel kinds: identity, fixed XOR mask, and the binary symmetric
// channel. BSC noise is driven by per-trial keyed streams, so a trial's
// outcome never depends on how many trials ran before it.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fcs/bitword.hpp"
#include "fcs/commitment.hpp"
#include "fcs/rational.hpp"

namespace fcs {

struct ChannelSpec {
    enum class Kind { identity, mask, bsc };

    Kind kind = Kind::identity;
    std::optional<BitWord> mask;           // present iff kind == mask
    std::optional<Rational> flip_probability;  // present iff kind == bsc, in [0, 1]
    std::uint64_t seed = 0;
    std::uint64_t stream_role = 0;

    static ChannelSpec identity();
    static ChannelSpec with_mask(BitWord mask);
    static ChannelSpec bsc(Rational flip_probability, std::uint64_t seed = 0,
                           std::uint64_t stream_role = 0);

    void validate() const;
};

/// Applies the channel to one word. For the BSC each bit flips
/// independently with the exact flip probability, using the stream keyed by
/// (seed, trial_index, stream_role); same inputs give bit-identical output
/// on every platform.
BitWord transmit(const BitWord& word, const ChannelSpec& channel, std::uint64_t trial_index);

struct AcceptanceStats {
    std::uint64_t trials = 0;
    std::uint64_t accepted = 0;
    Rational rate;           // accepted / trials
    Rational mean_nearness;  // exact average of the decision nearness values
    std::uint64_t recovery_correct = 0;  // trials whose recovered message matched
};

/// Runs seeded commit/transmit/open trials and tallies the decisions.
/// Per trial: a fresh witness drawn from (witness_seed, trial,
/// kRoleWitnessDraw), commitment through commit_channel, encoded message
/// through opening_channel, witness through witness_channel (clean by
/// default). Channel stream roles are fixed per position, so one seed may
/// drive all streams.
AcceptanceStats run_trials(const SchemeParams& params, const BitWord& message,
                           const ChannelSpec& commit_channel, const ChannelSpec& opening_channel,
                           std::uint64_t trials, std::uint64_t witness_seed,
                           const ChannelSpec& witness_channel = ChannelSpec::identity());

/// Exhaustive variant: every commitment corruption of exactly
/// `weight` bits once, clean opening, fresh witness per mask.
AcceptanceStats enumerate_weight_masks(const SchemeParams& params, const BitWord& message,
                                       std::size_t weight, std::uint64_t witness_seed);

struct SweepRow {
    Rational flip_probability;
    AcceptanceStats stats;
};

/// run_trials across flip probabilities applied to the commitment channel,
/// clean opening, with per-point seeds derived from `seed`.
std::vector<SweepRow> sweep(const SchemeParams& params, const BitWord& message,
                            const std::vector<Rational>& p_values, std::uint64_t trials,
                            std::uint64_t seed);

}  // namespace fcs
