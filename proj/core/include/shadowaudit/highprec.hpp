#pragma once

#include <cstddef>
#include <vector>

#include "shadowaudit/logistic.hpp"
#include "shadowaudit/mp_real.hpp"

namespace shadowaudit {

inline constexpr int kMinReferenceDigits = 50;
inline constexpr int kDefaultReferenceDigits = 1000;

/// Binary precision used for a working precision of `digits` decimal digits:
/// ceil(digits * log2(10)) plus 16 guard bits.
mpfr_prec_t working_bits(int digits);

/// High-precision orbit standing in for the true orbit.
///
/// r and x0 enter as exact rationals (e.g. 38/10 and 4/10) rounded once into
/// the working precision, so values[0] differs from the binary64 orbit's
/// initial value by the binary64 representation error of x0 (about 2.2e-17
/// for 0.4).
class ReferenceOrbit {
 public:
  ReferenceOrbit(MapParameters params, int digits, std::vector<MpReal> values);

  const MapParameters& params() const noexcept { return params_; }
  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return working_bits(digits_); }
  const std::vector<MpReal>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const MpReal& operator[](std::size_t n) const { return values_[n]; }

 private:
  MapParameters params_;
  int digits_;
  std::vector<MpReal> values_;
};

/// Iterates z' = (r*z)*(1-z) with every operation rounded to the working
/// precision. digits < kMinReferenceDigits is a ConfigError.
ReferenceOrbit iterate_reference(const MapParameters& params, int digits = kDefaultReferenceDigits);

/// True iff the orbits computed at `digits` and `2*digits` differ by less
/// than `tolerance` at every iterate.
bool precision_sufficiency_check(const MapParameters& params, int digits, double tolerance);

/// max_n |a_n - b_n| between two reference orbits of the same parameters,
/// evaluated at the larger of the two precisions.
MpReal max_abs_difference(const ReferenceOrbit& a, const ReferenceOrbit& b);

}  // namespace shadowaudit
