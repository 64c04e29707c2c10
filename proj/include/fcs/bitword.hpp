// Fixed-length binary words and the distance machinery built on them.
//
// Bit 1 is the leftmost character of the text form; all words are
// immutable values after construction.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fcs/rational.hpp"

namespace fcs {

class BitWord {
  public:
    /// Parses an ASCII string of '0'/'1' characters, leftmost first.
    explicit BitWord(std::string_view text);

    static BitWord zeros(std::size_t length);

    std::size_t size() const { return bits_.size(); }
    bool bit(std::size_t index) const;  // 0-based from the left

    std::size_t weight() const;
    BitWord complement() const;

    std::string to_string() const;

    friend BitWord operator^(const BitWord& a, const BitWord& b);
    bool operator==(const BitWord& other) const = default;
    // Lexicographic order of the text form ('0' < '1').
    std::strong_ordering operator<=>(const BitWord& other) const = default;

  private:
    explicit BitWord(std::vector<std::uint8_t> bits);
    std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const BitWord& word);

/// Number of positions where a and b differ. Words must have equal length.
std::size_t hamming_distance(const BitWord& a, const BitWord& b);

/// hamming_distance(a, b) / n as an exact rational in [0, 1].
Rational nearness(const BitWord& a, const BitWord& b);

/// Acceptance function over a threshold z0 in [0, 1): returns 0 when
/// nearness(reference, candidate) <= z0, the nearness value itself otherwise.
/// A zero return signals acceptance.
Rational fuzz_membership(const BitWord& reference, const BitWord& candidate, const Rational& z0);

}  // namespace fcs
