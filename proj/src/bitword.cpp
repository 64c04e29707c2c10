#include "fcs/bitword.hpp"

#include <ostream>
#include <stdexcept>

namespace fcs {

namespace {

void require_same_length(const BitWord& a, const BitWord& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("incompatible word sizes: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

}  // namespace

BitWord::BitWord(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("bit word must have length >= 1");
    }
    bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit word may contain only '0'/'1': '" +
                                        std::string(text) + "'");
        }
        bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

BitWord::BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

BitWord BitWord::zeros(std::size_t length) {
    if (length == 0) {
        throw std::invalid_argument("bit word must have length >= 1");
    }
    return BitWord(std::vector<std::uint8_t>(length, 0));
}

bool BitWord::bit(std::size_t index) const {
    if (index >= bits_.size()) {
        throw std::out_of_range("bit index " + std::to_string(index) + " out of range");
    }
    return bits_[index] != 0;
}

std::size_t BitWord::weight() const {
    std::size_t w = 0;
    for (std::uint8_t b : bits_) w += b;
    return w;
}

BitWord BitWord::complement() const {
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ^ 1;
    return BitWord(std::move(out));
}

std::string BitWord::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

BitWord operator^(const BitWord& a, const BitWord& b) {
    require_same_length(a, b);
    std::vector<std::uint8_t> out(a.bits_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bits_[i] ^ b.bits_[i];
    return BitWord(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const BitWord& word) {
    return os << word.to_string();
}

std::size_t hamming_distance(const BitWord& a, const BitWord& b) {
    require_same_length(a, b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.bit(i) != b.bit(i)) ++d;
    }
    return d;
}

Rational nearness(const BitWord& a, const BitWord& b) {
    return Rational(hamming_distance(a, b), a.size());
}

Rational fuzz_membership(const BitWord& reference, const BitWord& candidate, const Rational& z0) {
    if (z0 >= Rational(1, 1)) {
        throw std::domain_error("threshold z0 must satisfy 0 <= z0 < 1, got " + z0.to_string());
    }
    const Rational z = nearness(reference, candidate);
    return z <= z0 ? Rational() : z;
}

}  // namespace fcs
