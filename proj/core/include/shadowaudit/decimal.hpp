#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace shadowaudit {

/// An exact finite decimal numeral, value = (-1)^negative * significand * 10^exponent.
///
/// The significand is kept as a digit string with no leading or trailing
/// zeros (zero is the empty string), so two numerals with the same rational
/// value compare equal regardless of how they were spelled ("3.8", "3.80",
/// "38e-1").
class Decimal {
 public:
  Decimal() = default;

  /// Accepts `[+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?`.
  /// Anything else (hex, inf, nan, whitespace, fractions) is a ParseError.
  static Decimal parse(std::string_view text);

  bool negative() const noexcept { return negative_; }
  bool is_zero() const noexcept { return significand_.empty(); }
  const std::string& significand() const noexcept { return significand_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  /// Exact three-way comparison of rational values.
  int compare(const Decimal& other) const;

  /// Unreduced numerator and denominator of the exact value as integer
  /// digit strings: "3.8" gives "38" and "10", "2e3" gives "2000" and "1".
  std::string numerator() const;
  std::string denominator() const;

  /// Canonical spelling, e.g. "3.8", "0.4", "1e-8".
  std::string canonical() const;

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.negative_ == b.negative_ && a.significand_ == b.significand_ &&
           a.exponent_ == b.exponent_;
  }

 private:
  bool negative_ = false;
  std::string significand_;
  std::int64_t exponent_ = 0;
};

/// Correctly rounded (nearest, ties-to-even) binary64 value of a decimal numeral.
/// Values beyond the binary64 range round to infinity, as IEEE-754 prescribes.
double nearest_binary64(std::string_view decimal);
double nearest_binary64(const Decimal& decimal);

}  // namespace shadowaudit
