#pragma once

#include <filesystem>
#include <iosfwd>

#include "cli/run_config.hpp"

namespace shadowaudit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntimeFailure = 1,
  kExitInvalidConfig = 2,
  kExitDivergenceCertified = 3,
};

/// Fixed orbits only. Writes orbits.{csv,json,svg} as requested.
int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full audit; writes audit.{csv,json} and fig1..fig4.svg as requested.
/// Returns kExitDivergenceCertified when the lower-bound series meets the
/// threshold within N iterates.
int run_audit(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The published experiment with every output format, plus the headline
/// numbers printed next to the published ones.
int run_reproduce(const std::filesystem::path& outdir, std::ostream& out, std::ostream& err);

/// Full command line: subcommand dispatch, config file, flag overrides.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shadowaudit::cli
