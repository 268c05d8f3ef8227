#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

namespace shadowaudit {

/// Owning wrapper around an MPFR number with a fixed binary precision.
/// Copies keep the source precision; assignment adopts the source precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits);
  MpReal(const MpReal& other);
  MpReal(MpReal&& other) noexcept;
  MpReal& operator=(const MpReal& other);
  MpReal& operator=(MpReal&& other) noexcept;
  ~MpReal();

  /// numerator/denominator are integer digit strings; one correct rounding.
  static MpReal from_rational(std::string_view numerator, std::string_view denominator,
                              mpfr_prec_t bits);
  /// Exact whenever bits >= 53.
  static MpReal from_double(double value, mpfr_prec_t bits);

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Plain positional decimal with the given number of significant digits,
  /// rounded to nearest. Zero prints as "0".
  std::string to_decimal(int significant_digits) const;

  friend int compare(const MpReal& a, const MpReal& b) noexcept {
    return mpfr_cmp(a.value_, b.value_);
  }
  friend bool operator==(const MpReal& a, const MpReal& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }

 private:
  mpfr_t value_;
};

}  // namespace shadowaudit
