#include "shadowaudit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shadowaudit/errors.hpp"

namespace shadowaudit {
namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw UsageError("series length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

std::vector<double> half_abs_difference(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  std::vector<double> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = std::fabs(a[n] - b[n]) / 2.0;
  return out;
}

std::vector<double> abs_deviation(std::span<const double> orbit, std::span<const MpReal> reference) {
  require_same_length(orbit.size(), reference.size());
  std::vector<double> out(orbit.size());
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    // A binary64 operand fits exactly at any reference precision, so the
    // subtraction rounds once at that precision and once more into binary64.
    MpReal diff = MpReal::from_double(orbit[n], reference[n].precision());
    mpfr_sub(diff.get(), diff.get(), reference[n].get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    out[n] = diff.to_double();
  }
  return out;
}

ErrorSeries lower_bound_series(const FixedOrbit& a, const FixedOrbit& b) {
  if (!(a.params() == b.params())) throw UsageError("orbits were generated from different parameters");
  return {SeriesKind::LowerBound, half_abs_difference(a.values(), b.values()),
          {std::string(form_name(a.form())), std::string(form_name(b.form()))}};
}

ErrorSeries deviation_series(const FixedOrbit& orbit, const ReferenceOrbit& reference) {
  if (!(orbit.params() == reference.params())) {
    throw UsageError("orbit and reference were generated from different parameters");
  }
  return {SeriesKind::Deviation, abs_deviation(orbit.values(), reference.values()),
          {std::string(form_name(orbit.form())), "P"}};
}

CrossingResult first_crossing(std::span<const double> values, double threshold) {
  if (!(threshold > 0.0)) throw ConfigError("crossing threshold must be positive");
  CrossingResult result{threshold, std::nullopt, 0.0};
  const auto it = std::find_if(values.begin(), values.end(),
                               [threshold](double v) { return v >= threshold; });
  if (it != values.end()) {
    result.iterate = static_cast<std::size_t>(it - values.begin());
    result.delta_at_crossing = *it;
  }
  return result;
}

CrossingResult first_crossing(const ErrorSeries& series, double threshold) {
  return first_crossing(series.values, threshold);
}

// Correctly rounded through MPFR so exported logs do not depend on the libm.
std::vector<double> log10_series(std::span<const double> values) {
  std::vector<double> out(values.size());
  mpfr_t v;
  mpfr_init2(v, 53);
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (values[n] == 0.0) {
      out[n] = kLog10ZeroSentinel;
      continue;
    }
    mpfr_set_d(v, values[n], MPFR_RNDN);
    mpfr_log10(v, v, MPFR_RNDN);
    out[n] = mpfr_get_d(v, MPFR_RNDN);
  }
  mpfr_clear(v);
  return out;
}

std::vector<double> log10_series(const ErrorSeries& series) { return log10_series(series.values); }

std::vector<bool> theorem1_certificate(std::span<const double> a, std::span<const double> b,
                                       std::span<const MpReal> reference) {
  require_same_length(a.size(), b.size());
  require_same_length(a.size(), reference.size());
  std::vector<bool> holds(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    // 53-bit operands in [0,1]: a difference needs at most ~110 bits to be
    // exact, and the reference precision is far above that.
    const mpfr_prec_t bits = std::max<mpfr_prec_t>(reference[n].precision(), 256);
    MpReal da = MpReal::from_double(a[n], bits);
    MpReal db = MpReal::from_double(b[n], bits);
    MpReal alpha(bits);
    mpfr_sub(alpha.get(), da.get(), db.get(), MPFR_RNDN);
    mpfr_abs(alpha.get(), alpha.get(), MPFR_RNDN);
    mpfr_div_2ui(alpha.get(), alpha.get(), 1, MPFR_RNDN);

    mpfr_sub(da.get(), da.get(), reference[n].get(), MPFR_RNDN);
    mpfr_abs(da.get(), da.get(), MPFR_RNDN);
    mpfr_sub(db.get(), db.get(), reference[n].get(), MPFR_RNDN);
    mpfr_abs(db.get(), db.get(), MPFR_RNDN);

    holds[n] = mpfr_cmp(da.get(), alpha.get()) >= 0 || mpfr_cmp(db.get(), alpha.get()) >= 0;
  }
  return holds;
}

std::vector<bool> theorem1_certificate(const FixedOrbit& a, const FixedOrbit& b,
                                       const ReferenceOrbit& reference) {
  if (!(a.params() == b.params()) || !(a.params() == reference.params())) {
    throw UsageError("certificate operands were generated from different parameters");
  }
  return theorem1_certificate(a.values(), b.values(), reference.values());
}

}  // namespace shadowaudit
