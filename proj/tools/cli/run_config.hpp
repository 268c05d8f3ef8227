#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadowaudit/logistic.hpp"

namespace shadowaudit::cli {

inline constexpr const char* kOutputDirEnv = "SHADOWAUDIT_OUT";
inline constexpr const char* kFallbackOutputDir = "shadowaudit-out";

struct OutputFormats {
  bool csv = false;
  bool json = false;
  bool svg = false;

  bool any() const noexcept { return csv || json || svg; }
  friend bool operator==(const OutputFormats&, const OutputFormats&) = default;
};

/// Accepts "csv", "json", "svg"; anything else is a ConfigError.
OutputFormats parse_formats(const std::vector<std::string>& names);
std::vector<std::string> format_names(const OutputFormats& formats);

struct RunConfig {
  std::string r = "3.8";
  std::string x0 = "0.4";
  std::size_t iterates = 100;
  int digits = 1000;
  std::string threshold = "1e-8";
  std::vector<EvaluationForm> forms = {EvaluationForm::G, EvaluationForm::H};
  std::filesystem::path output_dir = kFallbackOutputDir;
  OutputFormats formats{true, true, false};

  /// MapParameters constraints, digits >= 50, threshold > 0, at least one
  /// form and one format, and no plots for a zero-iterate run.
  /// Throws ParseError / ConfigError.
  MapParameters validate() const;

  nlohmann::ordered_json to_json() const;
  /// Missing keys keep their current values; unknown keys are a ConfigError.
  void merge_json(const nlohmann::json& j);

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Output directory default: $SHADOWAUDIT_OUT when set and non-empty,
/// otherwise "shadowaudit-out".
std::filesystem::path default_output_dir();

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

}  // namespace shadowaudit::cli
