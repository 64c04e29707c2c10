// The commitment scheme: public parameters, commit, and the two opening
// rules (exact equality, and fuzzy acceptance after nearest-neighbor
// correction).

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fcs/bitword.hpp"
#include "fcs/code.hpp"
#include "fcs/rational.hpp"

namespace fcs {

/// Public parameters shared by both parties. The combiner and correction
/// function are fixed for this scheme: XOR blinding and nearest-neighbor
/// correction in the code.
struct SchemeParams {
    CodeSet code;
    Rational z0;

    static constexpr std::string_view kCombiner = "XOR";
    static constexpr std::string_view kCorrection = "nearest";
    static constexpr std::string_view kPrng = "splitmix64";
};

/// What the sender reveals at open time: the encoded message g(m) and the
/// blinding codeword S. Values read back from transit may no longer be
/// codewords.
struct Opening {
    BitWord encoded_message;
    BitWord witness;
};

struct CommitResult {
    BitWord commitment;  // g(m) XOR S
    Opening opening;
};

/// Outcome of a fuzzy open.
/// Invariant: accepted <=> fuzz_value = 0 <=> nearness_value <= z0.
struct Decision {
    bool accepted;
    BitWord reconstructed;  // c' = received g(m) XOR received S
    BitWord corrected;      // f(c')
    Rational nearness_value;
    Rational fuzz_value;
    std::optional<BitWord> recovered_message;  // present iff accepted
};

/// Validates 0 <= z0 < 1 and fixes the public parameters.
SchemeParams setup(CodeSet code, Rational z0);

/// commitment = g(message) XOR witness. The witness must be a codeword.
CommitResult commit(const SchemeParams& params, const BitWord& message, const BitWord& witness);

/// Same, with the witness drawn uniformly from the code by the seeded
/// generator (stream role kRoleWitnessDraw, trial `trial`).
CommitResult commit_seeded(const SchemeParams& params, const BitWord& message,
                           std::uint64_t seed, std::uint64_t trial = 0);

/// Exact decision rule: recompute c' and compare with the commitment
/// bit-for-bit. No correction, no threshold.
bool open_exact(const SchemeParams& params, const BitWord& commitment, const Opening& opening);

/// Fuzzy decision rule: correct c' to the nearest codeword and accept when
/// nearness(received commitment, f(c')) <= z0. The received commitment is
/// compared as-is, uncorrected, so noise on it consumes the z0 budget
/// directly. On acceptance the message is recovered by XOR-ing the received
/// witness back out of f(c') and correcting the result into the code.
Decision open_fuzzy(const SchemeParams& params, const BitWord& received_commitment,
                    const Opening& received_opening);

}  // namespace fcs
