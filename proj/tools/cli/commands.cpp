#include "cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadowaudit/errors.hpp"
#include "shadowaudit/report.hpp"

namespace shadowaudit::cli {
namespace {

namespace fs = std::filesystem;

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

template <typename Writer>
fs::path write_with(const fs::path& path, Writer&& writer) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  writer(file);
  return path;
}

bool has_form(const RunConfig& c, EvaluationForm f) {
  return std::find(c.forms.begin(), c.forms.end(), f) != c.forms.end();
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Maps library exceptions onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeFailure;
  }
}

int audit_with_params(const MapParameters& params, const AuditOptions& options,
                      const OutputFormats& formats, const fs::path& outdir, bool headlines,
                      std::ostream& out) {
  const AuditReport report = build_audit_report(params, options);
  prepare_dir(outdir);

  std::vector<fs::path> written;
  if (formats.csv) {
    written.push_back(write_with(outdir / "audit.csv",
                                 [&](std::ostream& f) { export_csv(report, f); }));
  }
  if (formats.json) {
    written.push_back(write_with(outdir / "audit.json",
                                 [&](std::ostream& f) { export_json(report, f); }));
  }
  if (formats.svg) {
    for (auto& p : emit_plots(report, outdir)) written.push_back(std::move(p));
  }
  for (const auto& p : written) out << "wrote " << p.string() << '\n';

  if (headlines && params.iterates() >= iterate_of_label(51)) {
    for (const auto& h : paper_headlines(report)) {
      out << h.quantity << " at n=" << h.label << ": " << fixed3(h.value)
          << "  (published " << fixed3(h.published) << ")\n";
    }
  }

  const auto& c = report.crossing_lower_bound;
  if (c.iterate) {
    out << "lower-bound crossing: iterate " << *c.iterate << " (n=" << sample_label(*c.iterate)
        << "), delta_alpha=" << format_binary64(c.delta_at_crossing)
        << " >= " << report.environment.threshold << "; divergence certified\n";
    return kExitDivergenceCertified;
  }
  out << "lower-bound crossing: none within " << params.iterates()
      << " iterates at threshold " << report.environment.threshold << '\n';
  return kExitOk;
}

}  // namespace

int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MapParameters params = config.validate();
    std::vector<FixedOrbit> orbits;
    for (auto form : config.forms) orbits.push_back(iterate_fixed(form, params));

    prepare_dir(config.output_dir);
    std::vector<fs::path> written;
    if (config.formats.csv) {
      written.push_back(write_with(config.output_dir / "orbits.csv",
                                   [&](std::ostream& f) { export_orbits_csv(orbits, f); }));
    }
    if (config.formats.json) {
      written.push_back(write_with(config.output_dir / "orbits.json",
                                   [&](std::ostream& f) { export_orbits_json(orbits, f); }));
    }
    if (config.formats.svg) written.push_back(emit_orbit_plot(orbits, config.output_dir));
    for (const auto& p : written) out << "wrote " << p.string() << '\n';

    if (orbits.size() >= 2) {
      const auto d = first_divergence(orbits[0], orbits[1]);
      if (d < orbits[0].size()) {
        out << "forms " << form_name(orbits[0].form()) << " and " << form_name(orbits[1].form())
            << " first differ at iterate " << d << '\n';
      } else {
        out << "forms " << form_name(orbits[0].form()) << " and " << form_name(orbits[1].form())
            << " agree bit-for-bit\n";
      }
    }
    return static_cast<int>(kExitOk);
  });
}

int run_audit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MapParameters params = config.validate();
    if (!has_form(config, EvaluationForm::G) || !has_form(config, EvaluationForm::H)) {
      throw ConfigError("audit needs both forms G and H");
    }
    AuditOptions options;
    options.digits = config.digits;
    options.threshold = config.threshold;
    return audit_with_params(params, options, config.formats, config.output_dir, false, out);
  });
}

int run_reproduce(const fs::path& outdir, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    return audit_with_params(paper_parameters(), AuditOptions{}, OutputFormats{true, true, true},
                             outdir, true, out);
  });
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-precision vs high-precision audit of logistic-map pseudo-orbits"};
  app.require_subcommand(1);
  app.footer(std::string("Environment:\n  ") + kOutputDirEnv +
             "  default output directory (otherwise ./" + kFallbackOutputDir + ")\n\n"
             "Exit codes: 0 ok, 1 runtime failure, 2 invalid configuration,\n"
             "            3 divergence certified (audit / reproduce-paper)");

  std::optional<std::string> r, x0, threshold, config_path;
  std::optional<std::size_t> iterates;
  std::optional<int> digits;
  std::vector<std::string> forms, formats;
  std::string out_dir;
  bool print_config = false;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--r", r, "map parameter r in [0,4] (decimal, default 3.8)");
    sub->add_option("--x0", x0, "initial condition in [0,1] (decimal, default 0.4)");
    sub->add_option("--n", iterates, "number of iterates N (default 100)");
    sub->add_option("--digits", digits, "reference precision in decimal digits (>= 50, default 1000)");
    sub->add_option("--threshold", threshold, "shadowing distance (decimal, default 1e-8)");
    sub->add_option("--forms", forms, "evaluation forms, comma separated (G,H)")->delimiter(',');
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--formats", formats, "output formats: csv,json,svg (default csv,json)")
        ->delimiter(',');
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    sub->add_flag("--print-config", print_config, "print the effective config as JSON and exit");
  };

  auto* simulate = app.add_subcommand("simulate", "iterate the binary64 forms only");
  auto* audit = app.add_subcommand("audit", "lower-bound and reference-orbit audit");
  auto* reproduce = app.add_subcommand("reproduce-paper",
                                       "r=3.8, x0=0.4, N=100, 1000 digits, threshold 1e-8, all outputs");
  add_run_flags(simulate);
  add_run_flags(audit);
  reproduce->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  if (reproduce->parsed()) {
    return run_reproduce(out_dir.empty() ? default_output_dir() : fs::path(out_dir), out, err);
  }

  return guarded(err, [&]() -> int {
    RunConfig config;
    config.output_dir = default_output_dir();
    if (config_path) config = load_config_file(*config_path, config);
    if (r) config.r = *r;
    if (x0) config.x0 = *x0;
    if (iterates) config.iterates = *iterates;
    if (digits) config.digits = *digits;
    if (threshold) config.threshold = *threshold;
    if (!forms.empty()) {
      config.forms.clear();
      for (const auto& f : forms) config.forms.push_back(parse_form(f));
    }
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (!formats.empty()) config.formats = parse_formats(formats);

    if (print_config) {
      out << config.to_json().dump(2) << '\n';
      return kExitOk;
    }
    return simulate->parsed() ? run_simulate(config, out, err) : run_audit(config, out, err);
  });
}

}  // namespace shadowaudit::cli
