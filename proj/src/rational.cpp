#include "fcs/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace fcs {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked_u64(u128 v, const char* what) {
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error(std::string("rational overflow in ") + what);
    }
    return static_cast<std::uint64_t>(v);
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational reduce128(u128 num, u128 den, const char* what) {
    const u128 g = num == 0 ? den : gcd128(num, den);
    return Rational(checked_u64(num / g, what), checked_u64(den / g, what));
}

std::uint64_t parse_u64(std::string_view digits, std::string_view original) {
    if (digits.empty()) {
        throw std::invalid_argument("bad rational: '" + std::string(original) + "'");
    }
    u128 value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad rational: '" + std::string(original) + "'");
        }
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("rational literal too large: '" + std::string(original) + "'");
        }
    }
    return static_cast<std::uint64_t>(value);
}

}  // namespace

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("rational denominator must be positive");
    }
    const std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_u64(text.substr(0, slash), text),
                        parse_u64(text.substr(slash + 1), text));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if (frac_part.empty()) {
            throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
        }
        const std::uint64_t whole = int_part.empty() ? 0 : parse_u64(int_part, text);
        const std::uint64_t frac = parse_u64(frac_part, text);
        u128 den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
        const std::uint64_t den64 = checked_u64(den, "decimal parse");
        const std::uint64_t num = checked_u64(static_cast<u128>(whole) * den64 + frac, "decimal parse");
        return Rational(num, den64);
    }
    return Rational(parse_u64(text, text), 1);
}

Rational Rational::operator+(const Rational& other) const {
    const std::uint64_t g = std::gcd(den_, other.den_);
    const u128 num = static_cast<u128>(num_) * (other.den_ / g) +
                     static_cast<u128>(other.num_) * (den_ / g);
    const u128 den = static_cast<u128>(den_) * (other.den_ / g);
    return reduce128(num, den, "addition");
}

Rational Rational::divided_by(std::uint64_t divisor) const {
    if (divisor == 0) {
        throw std::invalid_argument("division by zero");
    }
    const std::uint64_t g = std::gcd(num_, divisor);
    const u128 den = static_cast<u128>(den_) * (divisor / g);
    return Rational(num_ / g, checked_u64(den, "division"));
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    const u128 lhs = static_cast<u128>(num_) * other.den_;
    const u128 rhs = static_cast<u128>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational abs_diff(const Rational& a, const Rational& b) {
    const Rational& lo = (a < b) ? a : b;
    const Rational& hi = (a < b) ? b : a;
    const std::uint64_t g = std::gcd(lo.denominator(), hi.denominator());
    const u128 num = static_cast<u128>(hi.numerator()) * (lo.denominator() / g) -
                     static_cast<u128>(lo.numerator()) * (hi.denominator() / g);
    const u128 den = static_cast<u128>(lo.denominator()) * (hi.denominator() / g);
    return reduce128(num, den, "abs_diff");
}

}  // namespace fcs
