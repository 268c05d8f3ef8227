#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shadowaudit/highprec.hpp"
#include "shadowaudit/logistic.hpp"

namespace shadowaudit {

enum class SeriesKind { LowerBound, Deviation };

/// Per-iterate error values delta_n >= 0, stored as binary64.
///
/// LowerBound series hold |a_n - b_n| / 2 for two pseudo-orbits from
/// different evaluation forms: at least one of the two has a true error of
/// at least that much. Deviation series hold |x_n - ref_n| against a
/// high-precision reference orbit.
struct ErrorSeries {
  SeriesKind kind;
  std::vector<double> values;
  std::vector<std::string> sources;  // e.g. {"G", "H"} or {"G", "P"}
};

struct CrossingResult {
  double threshold;
  std::optional<std::size_t> iterate;  // first n with values[n] >= threshold
  double delta_at_crossing = 0.0;      // values[*iterate], 0 when no crossing
};

/// Sentinel for log10(0). Exporters render it as an empty field.
inline constexpr double kLog10ZeroSentinel = -std::numeric_limits<double>::infinity();

ErrorSeries lower_bound_series(const FixedOrbit& a, const FixedOrbit& b);
ErrorSeries deviation_series(const FixedOrbit& orbit, const ReferenceOrbit& reference);

/// Threshold must be positive (ConfigError otherwise). Crossing uses >=.
CrossingResult first_crossing(const ErrorSeries& series, double threshold);
CrossingResult first_crossing(std::span<const double> values, double threshold);

std::vector<double> log10_series(const ErrorSeries& series);
std::vector<double> log10_series(std::span<const double> values);

/// For each n: max(|a_n - ref_n|, |b_n - ref_n|) >= |a_n - b_n| / 2, evaluated
/// exactly at the reference precision. A false entry means an arithmetic bug,
/// since the inequality is the triangle inequality.
std::vector<bool> theorem1_certificate(const FixedOrbit& a, const FixedOrbit& b,
                                       const ReferenceOrbit& reference);
std::vector<bool> theorem1_certificate(std::span<const double> a, std::span<const double> b,
                                       std::span<const MpReal> reference);

/// Span forms of the two series builders, for callers holding raw values.
std::vector<double> half_abs_difference(std::span<const double> a, std::span<const double> b);
std::vector<double> abs_deviation(std::span<const double> orbit, std::span<const MpReal> reference);

}  // namespace shadowaudit
