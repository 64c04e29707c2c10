#include "fcs/commitment.hpp"

#include <stdexcept>

#include "fcs/prng.hpp"

namespace fcs {

namespace {

void require_length(const BitWord& word, std::size_t n, const char* what) {
    if (word.size() != n) {
        throw std::invalid_argument(std::string(what) + " has length " +
                                    std::to_string(word.size()) + ", expected " +
                                    std::to_string(n));
    }
}

}  // namespace

SchemeParams setup(CodeSet code, Rational z0) {
    if (z0 >= Rational(1, 1)) {
        throw std::domain_error("threshold z0 must satisfy 0 <= z0 < 1, got " + z0.to_string());
    }
    return SchemeParams{std::move(code), z0};
}

CommitResult commit(const SchemeParams& params, const BitWord& message, const BitWord& witness) {
    const BitWord encoded = params.code.encode(message);
    require_length(witness, params.code.n(), "witness");
    if (!params.code.contains(witness)) {
        throw std::invalid_argument("witness " + witness.to_string() +
                                    " is not a codeword of code '" + params.code.id() + "'");
    }
    return CommitResult{encoded ^ witness, Opening{encoded, witness}};
}

CommitResult commit_seeded(const SchemeParams& params, const BitWord& message,
                           std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 rng(derive_stream_seed(seed, trial, kRoleWitnessDraw));
    const auto& codewords = params.code.codewords();
    const BitWord& witness = codewords[rng.next_below(codewords.size())];
    return commit(params, message, witness);
}

bool open_exact(const SchemeParams& params, const BitWord& commitment, const Opening& opening) {
    const std::size_t n = params.code.n();
    require_length(commitment, n, "commitment");
    require_length(opening.encoded_message, n, "encoded message");
    require_length(opening.witness, n, "witness");
    return (opening.encoded_message ^ opening.witness) == commitment;
}

Decision open_fuzzy(const SchemeParams& params, const BitWord& received_commitment,
                    const Opening& received_opening) {
    const std::size_t n = params.code.n();
    require_length(received_commitment, n, "commitment");
    require_length(received_opening.encoded_message, n, "encoded message");
    require_length(received_opening.witness, n, "witness");

    const BitWord reconstructed = received_opening.encoded_message ^ received_opening.witness;
    const BitWord corrected = params.code.correct(reconstructed);
    const Rational nearness_value = nearness(received_commitment, corrected);
    const Rational fuzz_value = fuzz_membership(received_commitment, corrected, params.z0);
    const bool accepted = fuzz_value.is_zero();

    std::optional<BitWord> recovered;
    if (accepted) {
        // strip the witness and force the result back into the code before
        // inverting the encoding map
        const BitWord unblinded = corrected ^ received_opening.witness;
        recovered = params.code.decode(params.code.correct(unblinded));
    }
    return Decision{accepted, reconstructed, corrected, nearness_value, fuzz_value,
                    std::move(recovered)};
}

}  // namespace fcs
