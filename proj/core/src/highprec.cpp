#include "shadowaudit/highprec.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "shadowaudit/errors.hpp"

namespace shadowaudit {

mpfr_prec_t working_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

ReferenceOrbit::ReferenceOrbit(MapParameters params, int digits, std::vector<MpReal> values)
    : params_(std::move(params)), digits_(digits), values_(std::move(values)) {
  if (values_.size() != params_.iterates() + 1) {
    throw UsageError("reference orbit length does not match iterate count");
  }
}

ReferenceOrbit iterate_reference(const MapParameters& params, int digits) {
  if (digits < kMinReferenceDigits) {
    throw ConfigError("reference digits must be >= " + std::to_string(kMinReferenceDigits) +
                      ", got " + std::to_string(digits));
  }
  const mpfr_prec_t bits = working_bits(digits);
  const MpReal r = MpReal::from_rational(params.r().numerator(), params.r().denominator(), bits);

  std::vector<MpReal> values;
  values.reserve(params.iterates() + 1);
  values.push_back(
      MpReal::from_rational(params.x0().numerator(), params.x0().denominator(), bits));

  MpReal rz(bits);
  MpReal one_minus(bits);
  for (std::size_t n = 0; n < params.iterates(); ++n) {
    const MpReal& z = values.back();
    mpfr_mul(rz.get(), r.get(), z.get(), MPFR_RNDN);
    mpfr_ui_sub(one_minus.get(), 1, z.get(), MPFR_RNDN);
    MpReal next(bits);
    mpfr_mul(next.get(), rz.get(), one_minus.get(), MPFR_RNDN);
    if (!mpfr_number_p(next.get()) || mpfr_sgn(next.get()) < 0 ||
        mpfr_cmp_ui(next.get(), 1) > 0) {
      throw Error("internal error: reference orbit left [0,1] at iterate " +
                  std::to_string(n + 1));
    }
    values.push_back(std::move(next));
  }
  return ReferenceOrbit(params, digits, std::move(values));
}

MpReal max_abs_difference(const ReferenceOrbit& a, const ReferenceOrbit& b) {
  if (!(a.params() == b.params())) throw UsageError("reference orbits have different parameters");
  const mpfr_prec_t bits = std::max(a.bits(), b.bits());
  MpReal worst(bits);
  MpReal diff(bits);
  for (std::size_t n = 0; n < a.size(); ++n) {
    mpfr_sub(diff.get(), a[n].get(), b[n].get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    if (mpfr_cmp(diff.get(), worst.get()) > 0) mpfr_set(worst.get(), diff.get(), MPFR_RNDN);
  }
  return worst;
}

bool precision_sufficiency_check(const MapParameters& params, int digits, double tolerance) {
  const ReferenceOrbit base = iterate_reference(params, digits);
  const ReferenceOrbit doubled = iterate_reference(params, 2 * digits);
  return mpfr_cmp_d(max_abs_difference(base, doubled).get(), tolerance) < 0;
}

}  // namespace shadowaudit
