#include "shadowaudit/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>

#include <nlohmann/json.hpp>

#include "shadowaudit/errors.hpp"
#include "shadowaudit/version.hpp"
#include "svg_plot.hpp"

namespace shadowaudit {
namespace {

using Json = nlohmann::ordered_json;

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("write failed; output may be partial");
}

std::string log10_field(double v) { return std::isfinite(v) ? format_binary64(v) : std::string(); }

Json log10_json(double v) { return std::isfinite(v) ? Json(format_binary64(v)) : Json(nullptr); }

Json strings(std::span<const double> values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(format_binary64(v));
  return arr;
}

Json crossing_json(const CrossingResult& c, const std::string& threshold_text) {
  Json j;
  j["threshold"] = threshold_text;
  if (c.iterate) {
    j["iterate"] = *c.iterate;
    j["delta"] = format_binary64(c.delta_at_crossing);
  } else {
    j["iterate"] = nullptr;
    j["delta"] = nullptr;
  }
  return j;
}

// Inclusive iterate range [first, last] for a published label window,
// clipped to the run; the whole run when the clip leaves < 2 samples.
struct Window {
  std::size_t first;
  std::size_t last;
};

Window label_window(std::size_t iterates, std::size_t label_lo, std::size_t label_hi) {
  const std::size_t first = iterate_of_label(label_lo);
  const std::size_t last = std::min(iterate_of_label(label_hi), iterates);
  if (first >= last) return {0, iterates};
  return {first, last};
}

svg::Series make_series(std::string label, svg::Marker marker, std::span<const double> values,
                        Window w) {
  svg::Series s{std::move(label), marker, {}};
  for (std::size_t n = w.first; n <= w.last; ++n) {
    s.points.emplace_back(static_cast<double>(sample_label(n)), values[n]);
  }
  return s;
}

std::vector<double> reference_as_binary64(const ReferenceOrbit& reference) {
  std::vector<double> out;
  out.reserve(reference.size());
  for (const auto& v : reference.values()) out.push_back(v.to_double());
  return out;
}

// Subscript followed by text back on the baseline.
std::string sub(std::string_view text, std::string_view after) {
  return "<tspan dy=\"4\" font-size=\"11\">" + std::string(text) + "</tspan><tspan dy=\"-4\">" +
         std::string(after) + "</tspan>";
}

}  // namespace

std::string format_binary64(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed; output may be partial");
}

MapParameters paper_parameters() { return MapParameters("3.8", "0.4", 100); }

AuditReport build_audit_report(const MapParameters& params, const AuditOptions& options) {
  if (options.digits < kMinReferenceDigits) {
    throw ConfigError("reference digits must be >= " + std::to_string(kMinReferenceDigits));
  }
  if (options.reference_output_digits < 1) {
    throw ConfigError("reference output digits must be >= 1");
  }
  const Decimal threshold_decimal = Decimal::parse(options.threshold);
  const double threshold = nearest_binary64(threshold_decimal);
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw ConfigError("threshold must be a positive finite number: " + options.threshold);
  }

  auto reference_job = std::async(std::launch::async, [&params, digits = options.digits] {
    return iterate_reference(params, digits);
  });
  FixedOrbit g = iterate_fixed(EvaluationForm::G, params);
  FixedOrbit h = iterate_fixed(EvaluationForm::H, params);
  ReferenceOrbit reference = reference_job.get();

  ErrorSeries lower = lower_bound_series(g, h);
  ErrorSeries dev_g = deviation_series(g, reference);
  ErrorSeries dev_h = deviation_series(h, reference);
  CrossingResult c_lower = first_crossing(lower, threshold);
  CrossingResult c_g = first_crossing(dev_g, threshold);
  CrossingResult c_h = first_crossing(dev_h, threshold);

  ReportEnvironment env;
  env.reference_digits = options.digits;
  env.reference_bits = static_cast<long>(reference.bits());
  env.reference_output_digits = options.reference_output_digits;
  env.threshold = threshold_decimal.canonical();
  env.tool_version = kVersion;

  return AuditReport{params,         std::move(g),     std::move(h),     std::move(reference),
                     std::move(lower), std::move(dev_g), std::move(dev_h), c_lower,
                     c_g,            c_h,              std::move(env)};
}

AuditReport reproduce_paper() { return build_audit_report(paper_parameters(), AuditOptions{}); }

std::vector<Headline> paper_headlines(const AuditReport& report) {
  if (report.params.iterates() < iterate_of_label(51)) {
    throw UsageError("headline numbers need at least 50 iterates");
  }
  const auto at = [](const ErrorSeries& s, std::size_t label) {
    const double v = s.values[iterate_of_label(label)];
    return log10_series(std::span<const double>(&v, 1)).front();
  };
  return {
      {"log10 delta_alpha", 51, at(report.lower_bound, 51), -7.638},
      {"log10 delta_GP", 43, at(report.deviation_g, 43), -7.921},
      {"log10 delta_HP", 43, at(report.deviation_h, 43), -7.954},
  };
}

void export_csv(const AuditReport& report, std::ostream& out) {
  const auto log_alpha = log10_series(report.lower_bound);
  const auto log_gp = log10_series(report.deviation_g);
  const auto log_hp = log10_series(report.deviation_h);
  const int p_digits = report.environment.reference_output_digits;

  out << "n,x_G,x_H,x_P,delta_alpha,delta_GP,delta_HP,log10_delta_alpha,log10_delta_GP,"
         "log10_delta_HP\n";
  for (std::size_t n = 0; n < report.orbit_g.size(); ++n) {
    out << n << ',' << format_binary64(report.orbit_g[n]) << ','
        << format_binary64(report.orbit_h[n]) << ',' << report.reference[n].to_decimal(p_digits)
        << ',' << format_binary64(report.lower_bound.values[n]) << ','
        << format_binary64(report.deviation_g.values[n]) << ','
        << format_binary64(report.deviation_h.values[n]) << ',' << log10_field(log_alpha[n])
        << ',' << log10_field(log_gp[n]) << ',' << log10_field(log_hp[n]) << '\n';
  }
  out.flush();
  check_stream(out);
}

void export_json(const AuditReport& report, std::ostream& out) {
  const auto& env = report.environment;
  Json j;
  j["format"] = "shadowaudit-audit";
  j["version"] = kReportFormatVersion;
  j["params"] = {{"r", report.params.r_text()},
                 {"x0", report.params.x0_text()},
                 {"iterates", report.params.iterates()}};
  j["environment"] = {{"fixed_precision", env.fixed_precision},
                      {"rounding", env.rounding},
                      {"fused_multiply_add", env.fused_multiply_add},
                      {"reference_digits", env.reference_digits},
                      {"reference_bits", env.reference_bits},
                      {"reference_output_digits", env.reference_output_digits},
                      {"threshold", env.threshold},
                      {"tool_version", env.tool_version}};

  Json reference = Json::array();
  for (const auto& v : report.reference.values()) {
    reference.push_back(v.to_decimal(env.reference_output_digits));
  }
  j["orbits"] = {{"G", strings(report.orbit_g.values())},
                 {"H", strings(report.orbit_h.values())},
                 {"P", std::move(reference)}};
  j["series"] = {{"lower_bound", strings(report.lower_bound.values)},
                 {"deviation_G", strings(report.deviation_g.values)},
                 {"deviation_H", strings(report.deviation_h.values)}};

  Json logs;
  for (const auto& [key, series] :
       {std::pair<const char*, const ErrorSeries*>{"lower_bound", &report.lower_bound},
        {"deviation_G", &report.deviation_g},
        {"deviation_H", &report.deviation_h}}) {
    Json arr = Json::array();
    for (double v : log10_series(*series)) arr.push_back(log10_json(v));
    logs[key] = std::move(arr);
  }
  j["log10"] = std::move(logs);

  j["crossings"] = {{"lower_bound", crossing_json(report.crossing_lower_bound, env.threshold)},
                    {"deviation_G", crossing_json(report.crossing_g, env.threshold)},
                    {"deviation_H", crossing_json(report.crossing_h, env.threshold)}};

  out << j.dump(2) << '\n';
  out.flush();
  check_stream(out);
}

std::vector<std::filesystem::path> emit_plots(const AuditReport& report,
                                              const std::filesystem::path& directory) {
  const std::size_t iterates = report.params.iterates();
  if (iterates == 0) throw UsageError("insufficient data: plots need at least one iterate");

  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());

  const Window values_window = label_window(iterates, 41, 101);
  const Window error_window = label_window(iterates, 31, 70);
  const double line_from = static_cast<double>(sample_label(error_window.first)) - 1.0;
  const double line_to = static_cast<double>(sample_label(error_window.last));
  const auto p = reference_as_binary64(report.reference);
  const auto log_alpha = log10_series(report.lower_bound);
  const auto log_gp = log10_series(report.deviation_g);
  const auto log_hp = log10_series(report.deviation_h);

  const std::string g_label = "G(X" + sub("n", ")");
  const std::string h_label = "H(X" + sub("n", ")");
  const std::string p_label = "P(X" + sub("n", ")");

  std::vector<std::pair<std::string, svg::Plot>> figures;
  figures.push_back(
      {"fig1.svg",
       {"Simulation of G(X) and H(X)",
        "n",
        g_label + ", " + h_label,
        {make_series(g_label, svg::Marker::Circle, report.orbit_g.values(), values_window),
         make_series(h_label, svg::Marker::Star, report.orbit_h.values(), values_window)},
        {}}});
  figures.push_back(
      {"fig2.svg",
       {"Evolution of the lower bound error",
        "n",
        "log" + sub("10", "(δ") + sub("α,n", ")"),
        {make_series("log" + sub("10", "(δ") + sub("α,n", ")"), svg::Marker::Circle,
                     log_alpha, error_window)},
        {{-8.0, line_from, line_to}}}});
  figures.push_back(
      {"fig3.svg",
       {"Simulation of G(X), H(X) and P(X)",
        "n",
        g_label + ", " + h_label + ", " + p_label,
        {make_series(g_label, svg::Marker::Circle, report.orbit_g.values(), values_window),
         make_series(h_label, svg::Marker::Star, report.orbit_h.values(), values_window),
         make_series(p_label, svg::Marker::Square, p, values_window)},
        {}}});
  const std::string gp_label = "log" + sub("10", "(δ") + sub("GP,n", ")");
  const std::string hp_label = "log" + sub("10", "(δ") + sub("HP,n", ")");
  figures.push_back({"fig4.svg",
                     {"Evolution of the deviations from the reference orbit",
                      "n",
                      gp_label + ", " + hp_label,
                      {make_series(gp_label, svg::Marker::Circle, log_gp, error_window),
                       make_series(hp_label, svg::Marker::Star, log_hp, error_window)},
                      {{-8.0, line_from, line_to}}}});

  std::vector<std::filesystem::path> written;
  for (const auto& [name, plot] : figures) {
    const auto path = directory / name;
    write_file(path, svg::render(plot));
    written.push_back(path);
  }
  return written;
}

void export_orbits_csv(std::span<const FixedOrbit> orbits, std::ostream& out) {
  if (orbits.empty()) throw UsageError("no orbits to export");
  for (const auto& o : orbits) {
    if (!(o.params() == orbits.front().params())) throw UsageError("orbits differ in parameters");
  }
  out << 'n';
  for (const auto& o : orbits) out << ",x_" << form_name(o.form());
  out << '\n';
  for (std::size_t n = 0; n < orbits.front().size(); ++n) {
    out << n;
    for (const auto& o : orbits) out << ',' << format_binary64(o[n]);
    out << '\n';
  }
  out.flush();
  check_stream(out);
}

void export_orbits_json(std::span<const FixedOrbit> orbits, std::ostream& out) {
  if (orbits.empty()) throw UsageError("no orbits to export");
  const auto& params = orbits.front().params();
  Json j;
  j["format"] = "shadowaudit-orbits";
  j["version"] = kReportFormatVersion;
  j["params"] = {{"r", params.r_text()}, {"x0", params.x0_text()}, {"iterates", params.iterates()}};
  j["environment"] = {{"fixed_precision", "binary64"},
                      {"rounding", "nearest-even"},
                      {"fused_multiply_add", false},
                      {"tool_version", kVersion}};
  Json obj = Json::object();
  for (const auto& o : orbits) obj[std::string(form_name(o.form()))] = strings(o.values());
  j["orbits"] = std::move(obj);
  out << j.dump(2) << '\n';
  out.flush();
  check_stream(out);
}

std::filesystem::path emit_orbit_plot(std::span<const FixedOrbit> orbits,
                                      const std::filesystem::path& directory) {
  if (orbits.empty() || orbits.front().params().iterates() == 0) {
    throw UsageError("insufficient data: plots need at least one iterate");
  }
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());

  const Window all{0, orbits.front().params().iterates()};
  svg::Plot plot{"Fixed-precision orbits", "n", "", {}, {}};
  for (const auto& o : orbits) {
    const std::string label = std::string(form_name(o.form())) + "(X" + sub("n", ")");
    if (!plot.y_label.empty()) plot.y_label += ", ";
    plot.y_label += label;
    plot.series.push_back(make_series(label,
                                      o.form() == EvaluationForm::G ? svg::Marker::Circle
                                                                    : svg::Marker::Star,
                                      o.values(), all));
  }
  const auto path = directory / "orbits.svg";
  write_file(path, svg::render(plot));
  return path;
}

}  // namespace shadowaudit
