#include "shadowaudit/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <string>

#include "shadowaudit/errors.hpp"

namespace shadowaudit {
namespace {

// Exponents beyond this are far outside anything binary64 or the map can use;
// the bound keeps numerator()/denominator() strings finite.
constexpr std::int64_t kMaxExponent = 100000;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw ParseError("malformed decimal numeral '" + std::string(text) + "': " + why);
}

}  // namespace

Decimal Decimal::parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  Decimal d;

  if (i < n && (text[i] == '+' || text[i] == '-')) {
    d.negative_ = text[i] == '-';
    ++i;
  }

  std::string digits;
  std::int64_t scale = 0;  // digits after the decimal point
  std::size_t int_digits = 0;
  while (i < n && is_digit(text[i])) {
    digits.push_back(text[i++]);
    ++int_digits;
  }
  std::size_t frac_digits = 0;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && is_digit(text[i])) {
      digits.push_back(text[i++]);
      ++frac_digits;
    }
  }
  if (int_digits + frac_digits == 0) fail(text, "no digits");
  scale = static_cast<std::int64_t>(frac_digits);

  std::int64_t exp10 = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == n || !is_digit(text[i])) fail(text, "empty exponent");
    while (i < n && is_digit(text[i])) {
      exp10 = exp10 * 10 + (text[i++] - '0');
      if (exp10 > kMaxExponent) fail(text, "exponent out of supported range");
    }
    if (exp_negative) exp10 = -exp10;
  }
  if (i != n) fail(text, "unexpected trailing characters");

  // Normalize: strip leading zeros, move trailing zeros into the exponent.
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) {
    d.negative_ = false;
    return d;
  }
  digits.erase(0, first);
  std::int64_t exponent = exp10 - scale;
  const auto last = digits.find_last_not_of('0');
  exponent += static_cast<std::int64_t>(digits.size() - 1 - last);
  digits.erase(last + 1);

  d.significand_ = std::move(digits);
  d.exponent_ = exponent;
  return d;
}

int Decimal::compare(const Decimal& other) const {
  const int sa = is_zero() ? 0 : (negative_ ? -1 : 1);
  const int sb = other.is_zero() ? 0 : (other.negative_ ? -1 : 1);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;

  // Same sign: compare magnitudes, then flip for negatives.
  int magnitude = 0;
  const auto lead_a = exponent_ + static_cast<std::int64_t>(significand_.size());
  const auto lead_b = other.exponent_ + static_cast<std::int64_t>(other.significand_.size());
  if (lead_a != lead_b) {
    magnitude = lead_a < lead_b ? -1 : 1;
  } else {
    const auto len = std::max(significand_.size(), other.significand_.size());
    for (std::size_t k = 0; k < len && magnitude == 0; ++k) {
      const char ca = k < significand_.size() ? significand_[k] : '0';
      const char cb = k < other.significand_.size() ? other.significand_[k] : '0';
      if (ca != cb) magnitude = ca < cb ? -1 : 1;
    }
  }
  return sa * magnitude;
}

std::string Decimal::numerator() const {
  if (is_zero()) return "0";
  std::string out = negative_ ? "-" : "";
  out += significand_;
  if (exponent_ > 0) out.append(static_cast<std::size_t>(exponent_), '0');
  return out;
}

std::string Decimal::denominator() const {
  if (exponent_ >= 0) return "1";
  std::string out = "1";
  out.append(static_cast<std::size_t>(-exponent_), '0');
  return out;
}

std::string Decimal::canonical() const {
  if (is_zero()) return "0";
  std::string out = negative_ ? "-" : "";
  const auto len = static_cast<std::int64_t>(significand_.size());
  const auto lead = exponent_ + len;  // position of the decimal point
  // Plain positional form when it stays short, scientific otherwise.
  if (exponent_ >= 0 && lead <= 21) {
    out += significand_;
    out.append(static_cast<std::size_t>(exponent_), '0');
  } else if (exponent_ < 0 && lead > 0) {
    out += significand_.substr(0, static_cast<std::size_t>(lead));
    out += '.';
    out += significand_.substr(static_cast<std::size_t>(lead));
  } else if (exponent_ < 0 && lead > -6) {
    out += "0.";
    out.append(static_cast<std::size_t>(-lead), '0');
    out += significand_;
  } else {
    out += significand_.substr(0, 1);
    if (len > 1) {
      out += '.';
      out += significand_.substr(1);
    }
    out += 'e';
    out += std::to_string(lead - 1);
  }
  return out;
}

double nearest_binary64(const Decimal& decimal) {
  if (decimal.is_zero()) return 0.0;
  // No decimal point in this spelling, so strtod's locale cannot interfere.
  std::string text = decimal.negative() ? "-" : "";
  text += decimal.significand();
  text += 'e';
  text += std::to_string(decimal.exponent());
  errno = 0;
  // glibc strtod is correctly rounded in round-to-nearest mode; ERANGE only
  // flags overflow to infinity or underflow, the returned value is still the
  // IEEE result.
  return std::strtod(text.c_str(), nullptr);
}

double nearest_binary64(std::string_view decimal) {
  return nearest_binary64(Decimal::parse(decimal));
}

}  // namespace shadowaudit
