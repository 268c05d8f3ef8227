#include "cli/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "shadowaudit/errors.hpp"
#include "shadowaudit/highprec.hpp"

namespace shadowaudit::cli {

OutputFormats parse_formats(const std::vector<std::string>& names) {
  OutputFormats f;
  for (const auto& name : names) {
    if (name == "csv") {
      f.csv = true;
    } else if (name == "json") {
      f.json = true;
    } else if (name == "svg") {
      f.svg = true;
    } else {
      throw ConfigError("unknown output format '" + name + "' (expected csv, json or svg)");
    }
  }
  return f;
}

std::vector<std::string> format_names(const OutputFormats& formats) {
  std::vector<std::string> out;
  if (formats.csv) out.emplace_back("csv");
  if (formats.json) out.emplace_back("json");
  if (formats.svg) out.emplace_back("svg");
  return out;
}

MapParameters RunConfig::validate() const {
  MapParameters params(r, x0, iterates);
  if (digits < kMinReferenceDigits) {
    throw ConfigError("digits must be >= " + std::to_string(kMinReferenceDigits));
  }
  const double t = nearest_binary64(threshold);
  if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("threshold must be positive and finite");
  if (forms.empty()) throw ConfigError("at least one evaluation form is required");
  if (!formats.any()) throw ConfigError("at least one output format is required");
  if (formats.svg && iterates == 0) {
    throw ConfigError("insufficient data: svg output needs at least one iterate");
  }
  return params;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r;
  j["x0"] = x0;
  j["n"] = iterates;
  j["digits"] = digits;
  j["threshold"] = threshold;
  auto f = nlohmann::ordered_json::array();
  for (auto form : forms) f.push_back(std::string(form_name(form)));
  j["forms"] = std::move(f);
  j["out"] = output_dir.string();
  j["formats"] = format_names(formats);
  return j;
}

void RunConfig::merge_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "r") {
        r = value.get<std::string>();
      } else if (key == "x0") {
        x0 = value.get<std::string>();
      } else if (key == "n") {
        iterates = value.get<std::size_t>();
      } else if (key == "digits") {
        digits = value.get<int>();
      } else if (key == "threshold") {
        threshold = value.get<std::string>();
      } else if (key == "forms") {
        forms.clear();
        for (const auto& name : value) forms.push_back(parse_form(name.get<std::string>()));
      } else if (key == "out") {
        output_dir = value.get<std::string>();
      } else if (key == "formats") {
        formats = parse_formats(value.get<std::vector<std::string>>());
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

std::filesystem::path default_output_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  if (env != nullptr && *env != '\0') return env;
  return kFallbackOutputDir;
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  base.merge_json(j);
  return base;
}

}  // namespace shadowaudit::cli
