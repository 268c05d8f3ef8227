#include "shadowaudit/mp_real.hpp"

#include <gmp.h>

#include <string>
#include <utility>

#include "shadowaudit/errors.hpp"

namespace shadowaudit {

MpReal::MpReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

MpReal::MpReal(const MpReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

// A moved-from MpReal only needs to be destructible or assignable, so it
// gets a minimal-precision zero in exchange.
MpReal::MpReal(MpReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

MpReal& MpReal::operator=(const MpReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

MpReal::~MpReal() {
  mpfr_clear(value_);
}

MpReal MpReal::from_rational(std::string_view numerator, std::string_view denominator,
                             mpfr_prec_t bits) {
  mpq_t q;
  mpq_init(q);
  const std::string num(numerator);
  const std::string den(denominator);
  if (mpz_set_str(mpq_numref(q), num.c_str(), 10) != 0 ||
      mpz_set_str(mpq_denref(q), den.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    throw ParseError("invalid rational " + num + "/" + den);
  }
  mpq_canonicalize(q);
  MpReal out(bits);
  mpfr_set_q(out.value_, q, MPFR_RNDN);
  mpq_clear(q);
  return out;
}

MpReal MpReal::from_double(double value, mpfr_prec_t bits) {
  MpReal out(bits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

std::string MpReal::to_decimal(int significant_digits) const {
  if (mpfr_zero_p(value_)) return "0";
  if (!mpfr_number_p(value_)) return mpfr_nan_p(value_) ? "nan" : (mpfr_sgn(value_) < 0 ? "-inf" : "inf");
  if (significant_digits < 1) significant_digits = 1;

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(significant_digits),
                           value_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  // value = 0.<digits> * 10^exp10
  if (exp10 <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-exp10), '0');
    out += digits;
  } else {
    const auto point = static_cast<std::size_t>(exp10);
    if (point >= digits.size()) {
      out += digits;
      out.append(point - digits.size(), '0');
    } else {
      out += digits.substr(0, point);
      out += '.';
      out += digits.substr(point);
    }
  }
  return out;
}

}  // namespace shadowaudit
