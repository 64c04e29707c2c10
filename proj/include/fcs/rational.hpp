// Exact non-negative rational arithmetic.
//
// Nearness values and acceptance thresholds are always compared exactly;
// a float comparison at the acceptance boundary could flip a decision.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fcs {

/// Non-negative rational, always stored in lowest terms.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::uint64_t numerator, std::uint64_t denominator);

    /// Accepts "a/b", a decimal such as "0.20", or a plain integer.
    static Rational parse(std::string_view text);

    std::uint64_t numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& other) const;
    Rational divided_by(std::uint64_t divisor) const;

    bool operator==(const Rational& other) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;

    std::string to_string() const;  // "num/den"
    double to_double() const;

  private:
    std::uint64_t num_;
    std::uint64_t den_;
};

/// |a - b|, exact.
Rational abs_diff(const Rational& a, const Rational& b);

}  // namespace fcs
