#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "shadowaudit/analysis.hpp"
#include "shadowaudit/highprec.hpp"
#include "shadowaudit/logistic.hpp"

namespace shadowaudit {

inline constexpr int kReportFormatVersion = 1;
inline constexpr int kDefaultReferenceOutputDigits = 30;
inline constexpr const char* kDefaultThreshold = "1e-8";

struct AuditOptions {
  int digits = kDefaultReferenceDigits;
  std::string threshold = kDefaultThreshold;  // decimal numeral, > 0
  int reference_output_digits = kDefaultReferenceOutputDigits;
};

/// Everything that determines a report's bytes.
struct ReportEnvironment {
  std::string fixed_precision = "binary64";
  std::string rounding = "nearest-even";
  bool fused_multiply_add = false;
  int reference_digits = kDefaultReferenceDigits;
  long reference_bits = 0;
  int reference_output_digits = kDefaultReferenceOutputDigits;
  std::string threshold;  // canonical decimal spelling, e.g. "1e-8"
  std::string tool_version;
};

struct AuditReport {
  MapParameters params;
  FixedOrbit orbit_g;
  FixedOrbit orbit_h;
  ReferenceOrbit reference;
  ErrorSeries lower_bound;
  ErrorSeries deviation_g;
  ErrorSeries deviation_h;
  CrossingResult crossing_lower_bound;
  CrossingResult crossing_g;
  CrossingResult crossing_h;
  ReportEnvironment environment;
};

/// Runs both binary64 forms and the reference orbit (concurrently), then all
/// series and crossings.
AuditReport build_audit_report(const MapParameters& params, const AuditOptions& options = {});

/// r = 3.8, x0 = 0.4, N = 100, 1000 digits, threshold 1e-8.
MapParameters paper_parameters();
AuditReport reproduce_paper();

/// Figures and the published numbers label samples t = n + 1 (the original
/// code iterates over t = 1..N+1), so "n = 51" there is iterate 50 here.
constexpr std::size_t sample_label(std::size_t iterate) noexcept { return iterate + 1; }
constexpr std::size_t iterate_of_label(std::size_t label) noexcept { return label - 1; }

struct Headline {
  std::string quantity;  // "log10 delta_alpha", "log10 delta_GP", "log10 delta_HP"
  std::size_t label;     // published sample label
  double value;          // this run
  double published;      // published value
};

/// The three published headline numbers next to this run's values.
/// Requires at least 50 iterates (UsageError otherwise).
std::vector<Headline> paper_headlines(const AuditReport& report);

/// 17 significant digits; parses back to the identical binary64.
std::string format_binary64(double value);

/// Columns: n,x_G,x_H,x_P,delta_alpha,delta_GP,delta_HP,log10_delta_alpha,
/// log10_delta_GP,log10_delta_HP. LF line ends; empty field for log10(0).
void export_csv(const AuditReport& report, std::ostream& out);

/// {format, version, params, environment, orbits, series, log10, crossings}.
/// Binary64 and high-precision values are strings.
void export_json(const AuditReport& report, std::ostream& out);

/// Writes fig1.svg .. fig4.svg into `directory` (created if missing).
/// Throws UsageError on an empty run and IoError if writing fails.
std::vector<std::filesystem::path> emit_plots(const AuditReport& report,
                                              const std::filesystem::path& directory);

/// Orbit-only exports for runs without a reference orbit: columns n, x_<form>...
void export_orbits_csv(std::span<const FixedOrbit> orbits, std::ostream& out);
void export_orbits_json(std::span<const FixedOrbit> orbits, std::ostream& out);
std::filesystem::path emit_orbit_plot(std::span<const FixedOrbit> orbits,
                                      const std::filesystem::path& directory);

/// Writes `content` to `path`, throwing IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace shadowaudit
