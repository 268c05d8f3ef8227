#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shadowaudit/decimal.hpp"

namespace shadowaudit {

/// Inputs of one logistic-map experiment, x_{n+1} = r x_n (1 - x_n).
///
/// r and x0 are held as exact decimals: the binary64 path rounds them to the
/// nearest double, the reference path imports the exact rational. Both come
/// from the same text.
class MapParameters {
 public:
  /// Validates r in [0,4], x0 in [0,1]. Throws ParseError / ConfigError.
  MapParameters(std::string_view r, std::string_view x0, std::size_t iterates);

  const std::string& r_text() const noexcept { return r_text_; }
  const std::string& x0_text() const noexcept { return x0_text_; }
  const Decimal& r() const noexcept { return r_; }
  const Decimal& x0() const noexcept { return x0_; }
  std::size_t iterates() const noexcept { return iterates_; }

  double r_binary64() const noexcept { return r_binary64_; }
  double x0_binary64() const noexcept { return x0_binary64_; }

  /// Equality of values, not spellings.
  friend bool operator==(const MapParameters& a, const MapParameters& b) {
    return a.r_ == b.r_ && a.x0_ == b.x0_ && a.iterates_ == b.iterates_;
  }

 private:
  std::string r_text_;
  std::string x0_text_;
  Decimal r_;
  Decimal x0_;
  std::size_t iterates_;
  double r_binary64_;
  double x0_binary64_;
};

/// One parenthesization of the logistic map, i.e. one pseudo-orbit generator.
///
///   G:  t1 = r*x;   t2 = 1-x;   x' = t1*t2     ((r x)(1 - x))
///   H:  t1 = 1-x;   t2 = x*t1;  x' = r*t2      (r (x (1 - x)))
///
/// Each operation is a single round-to-nearest binary64 operation; no fused
/// multiply-add, no wider intermediates.
enum class EvaluationForm { G, H };

std::string_view form_name(EvaluationForm form) noexcept;
/// Accepts "G" or "H" (case-insensitive). Throws ConfigError otherwise.
EvaluationForm parse_form(std::string_view name);

/// One map application under the form's operation schedule.
double step(EvaluationForm form, double x, double r) noexcept;

/// A binary64 pseudo-orbit; values[0] is the rounded initial condition.
class FixedOrbit {
 public:
  FixedOrbit(EvaluationForm form, MapParameters params, std::vector<double> values);

  EvaluationForm form() const noexcept { return form_; }
  const MapParameters& params() const noexcept { return params_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t n) const { return values_[n]; }

 private:
  EvaluationForm form_;
  MapParameters params_;
  std::vector<double> values_;
};

/// Runs params.iterates() steps. An iterate that is non-finite or leaves
/// [0,1] aborts the orbit with OrbitEscapeError carrying its index.
FixedOrbit iterate_fixed(EvaluationForm form, const MapParameters& params);

/// First index where the two orbits differ bitwise, or the common length if
/// they never do.
std::size_t first_divergence(const FixedOrbit& a, const FixedOrbit& b);

}  // namespace shadowaudit
