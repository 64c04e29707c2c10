#include "fcs/channel.hpp"

#include <stdexcept>
#include <string>

#include "fcs/prng.hpp"

namespace fcs {

ChannelSpec ChannelSpec::identity() {
    return ChannelSpec{};
}

ChannelSpec ChannelSpec::with_mask(BitWord mask) {
    ChannelSpec spec;
    spec.kind = Kind::mask;
    spec.mask = std::move(mask);
    return spec;
}

ChannelSpec ChannelSpec::bsc(Rational flip_probability, std::uint64_t seed,
                             std::uint64_t stream_role) {
    ChannelSpec spec;
    spec.kind = Kind::bsc;
    spec.flip_probability = std::move(flip_probability);
    spec.seed = seed;
    spec.stream_role = stream_role;
    return spec;
}

void ChannelSpec::validate() const {
    switch (kind) {
        case Kind::identity:
            break;
        case Kind::mask:
            if (!mask) throw std::invalid_argument("mask channel needs a mask word");
            break;
        case Kind::bsc:
            if (!flip_probability) {
                throw std::invalid_argument("bsc channel needs a flip probability");
            }
            if (*flip_probability > Rational(1, 1)) {
                throw std::invalid_argument("flip probability must be in [0, 1], got " +
                                            flip_probability->to_string());
            }
            break;
    }
}

BitWord transmit(const BitWord& word, const ChannelSpec& channel, std::uint64_t trial_index) {
    channel.validate();
    switch (channel.kind) {
        case ChannelSpec::Kind::identity:
            return word;
        case ChannelSpec::Kind::mask:
            return word ^ *channel.mask;
        case ChannelSpec::Kind::bsc: {
            SplitMix64 rng(derive_stream_seed(channel.seed, trial_index, channel.stream_role));
            const std::uint64_t num = channel.flip_probability->numerator();
            const std::uint64_t den = channel.flip_probability->denominator();
            std::string bits = word.to_string();
            for (char& c : bits) {
                // exact Bernoulli(num/den): uniform in [0, den), flip below num
                if (rng.next_below(den) < num) c = (c == '0') ? '1' : '0';
            }
            return BitWord(bits);
        }
    }
    throw std::logic_error("unreachable channel kind");
}

namespace {

ChannelSpec with_role(ChannelSpec spec, std::uint64_t role) {
    spec.stream_role = role;
    return spec;
}

AcceptanceStats finalize(std::uint64_t trials, std::uint64_t accepted, Rational nearness_sum,
                         std::uint64_t recovery_correct) {
    AcceptanceStats stats;
    stats.trials = trials;
    stats.accepted = accepted;
    stats.rate = Rational(accepted, trials);
    stats.mean_nearness = nearness_sum.divided_by(trials);
    stats.recovery_correct = recovery_correct;
    return stats;
}

}  // namespace

AcceptanceStats run_trials(const SchemeParams& params, const BitWord& message,
                           const ChannelSpec& commit_channel, const ChannelSpec& opening_channel,
                           std::uint64_t trials, std::uint64_t witness_seed,
                           const ChannelSpec& witness_channel) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    const ChannelSpec commit_ch = with_role(commit_channel, kRoleCommitmentChannel);
    const ChannelSpec encoded_ch = with_role(opening_channel, kRoleEncodedChannel);
    const ChannelSpec witness_ch = with_role(witness_channel, kRoleWitnessChannel);

    std::uint64_t accepted = 0;
    std::uint64_t recovery_correct = 0;
    Rational nearness_sum;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const CommitResult committed = commit_seeded(params, message, witness_seed, trial);
        const BitWord received_commitment = transmit(committed.commitment, commit_ch, trial);
        const Opening received_opening{
            transmit(committed.opening.encoded_message, encoded_ch, trial),
            transmit(committed.opening.witness, witness_ch, trial)};
        const Decision decision = open_fuzzy(params, received_commitment, received_opening);
        if (decision.accepted) ++accepted;
        if (decision.recovered_message && *decision.recovered_message == message) {
            ++recovery_correct;
        }
        nearness_sum = nearness_sum + decision.nearness_value;
    }
    return finalize(trials, accepted, nearness_sum, recovery_correct);
}

AcceptanceStats enumerate_weight_masks(const SchemeParams& params, const BitWord& message,
                                       std::size_t weight, std::uint64_t witness_seed) {
    const std::size_t n = params.code.n();
    if (weight > n) {
        throw std::invalid_argument("mask weight " + std::to_string(weight) +
                                    " exceeds word length " + std::to_string(n));
    }
    // positions in lexicographic order of the combination
    std::vector<std::size_t> pos(weight);
    for (std::size_t i = 0; i < weight; ++i) pos[i] = i;

    std::uint64_t count = 0;
    std::uint64_t accepted = 0;
    std::uint64_t recovery_correct = 0;
    Rational nearness_sum;
    for (;;) {
        std::string mask_bits(n, '0');
        for (std::size_t p : pos) mask_bits[p] = '1';
        const BitWord mask(mask_bits);

        const CommitResult committed = commit_seeded(params, message, witness_seed, count);
        const Decision decision =
            open_fuzzy(params, committed.commitment ^ mask, committed.opening);
        ++count;
        if (decision.accepted) ++accepted;
        if (decision.recovered_message && *decision.recovered_message == message) {
            ++recovery_correct;
        }
        nearness_sum = nearness_sum + decision.nearness_value;

        if (weight == 0) break;
        // advance to the next combination
        std::size_t i = weight;
        while (i > 0 && pos[i - 1] == n - weight + (i - 1)) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (std::size_t j = i; j < weight; ++j) pos[j] = pos[j - 1] + 1;
    }
    return finalize(count, accepted, nearness_sum, recovery_correct);
}

std::vector<SweepRow> sweep(const SchemeParams& params, const BitWord& message,
                            const std::vector<Rational>& p_values, std::uint64_t trials,
                            std::uint64_t seed) {
    std::vector<SweepRow> rows;
    rows.reserve(p_values.size());
    for (std::size_t i = 0; i < p_values.size(); ++i) {
        const std::uint64_t point_seed = derive_stream_seed(seed, i, kRoleSweep);
        const ChannelSpec commit_ch = ChannelSpec::bsc(p_values[i], point_seed);
        rows.push_back(SweepRow{
            p_values[i],
            run_trials(params, message, commit_ch, ChannelSpec::identity(), trials, point_seed)});
    }
    return rows;
}

}  // namespace fcs
