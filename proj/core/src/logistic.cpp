#include "shadowaudit/logistic.hpp"

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <utility>

#include "shadowaudit/errors.hpp"

// Wider intermediate evaluation (x87) would silently change every orbit.
#if defined(FLT_EVAL_METHOD) && FLT_EVAL_METHOD != 0
#error "binary64 kernels require FLT_EVAL_METHOD == 0 (build with SSE2 or equivalent)"
#endif

namespace shadowaudit {
namespace {

const Decimal& bound(int which) {
  static const Decimal values[] = {Decimal::parse("0"), Decimal::parse("1"), Decimal::parse("4")};
  return values[which];
}

Decimal parse_field(std::string_view name, std::string_view text) {
  try {
    return Decimal::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

MapParameters::MapParameters(std::string_view r, std::string_view x0, std::size_t iterates)
    : r_text_(r),
      x0_text_(x0),
      r_(parse_field("r", r)),
      x0_(parse_field("x0", x0)),
      iterates_(iterates) {
  if (r_.compare(bound(0)) < 0 || r_.compare(bound(2)) > 0) {
    throw ConfigError("r out of [0,4]: " + r_text_);
  }
  if (x0_.compare(bound(0)) < 0 || x0_.compare(bound(1)) > 0) {
    throw ConfigError("x0 out of [0,1]: " + x0_text_);
  }
  r_binary64_ = nearest_binary64(r_);
  x0_binary64_ = nearest_binary64(x0_);
}

std::string_view form_name(EvaluationForm form) noexcept {
  return form == EvaluationForm::G ? "G" : "H";
}

EvaluationForm parse_form(std::string_view name) {
  if (name == "G" || name == "g") return EvaluationForm::G;
  if (name == "H" || name == "h") return EvaluationForm::H;
  throw ConfigError("unknown evaluation form '" + std::string(name) + "' (expected G or H)");
}

// Compiled with -ffp-contract=off; the named temporaries mirror the schedule.
double step(EvaluationForm form, double x, double r) noexcept {
  switch (form) {
    case EvaluationForm::G: {
      const double t1 = r * x;
      const double t2 = 1.0 - x;
      return t1 * t2;
    }
    case EvaluationForm::H: {
      const double t1 = 1.0 - x;
      const double t2 = x * t1;
      return r * t2;
    }
  }
  return std::nan("");
}

FixedOrbit::FixedOrbit(EvaluationForm form, MapParameters params, std::vector<double> values)
    : form_(form), params_(std::move(params)), values_(std::move(values)) {
  if (values_.size() != params_.iterates() + 1) {
    throw UsageError("orbit length does not match iterate count");
  }
}

FixedOrbit iterate_fixed(EvaluationForm form, const MapParameters& params) {
  std::vector<double> values;
  values.reserve(params.iterates() + 1);
  values.push_back(params.x0_binary64());
  const double r = params.r_binary64();
  for (std::size_t n = 0; n < params.iterates(); ++n) {
    const double next = step(form, values.back(), r);
    if (!std::isfinite(next) || next < 0.0 || next > 1.0) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "form " << form_name(form) << " escaped [0,1] at iterate " << n + 1
          << " (value " << next << ")";
      throw OrbitEscapeError(n + 1, next, msg.str());
    }
    values.push_back(next);
  }
  return FixedOrbit(form, params, std::move(values));
}

std::size_t first_divergence(const FixedOrbit& a, const FixedOrbit& b) {
  const auto len = std::min(a.size(), b.size());
  for (std::size_t n = 0; n < len; ++n) {
    if (std::bit_cast<std::uint64_t>(a[n]) != std::bit_cast<std::uint64_t>(b[n])) return n;
  }
  return len;
}

}  // namespace shadowaudit
