#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ebitsim/config.hpp"
#include "ebitsim/protocols.hpp"

namespace ebitsim {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitNumericalFailure = 2,
};

/// Runs every row of the plan (in parallel when threads > 1); results are
/// in plan order. Throws ErrorKind::Numerical for zero amplitudes and for
/// ETPD rows whose oracle mismatch exceeds 5% (under-resolved grid).
std::vector<ProtocolResult> execute(const ExperimentConfig& config, int threads);

/// Report text in the configured format.
std::string render(const ExperimentConfig& config, const std::vector<ProtocolResult>& results);

/// Execute, write config.output_path, print one summary line per row to
/// `out`. Errors go to `err`; returns the exit code.
int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err,
                   int threads);

/// Parse + run. With require_sweep, a config without a sweep block is a
/// config error.
int run_config_text(const std::string& text, bool require_sweep, std::ostream& out,
                    std::ostream& err, int threads);

/// Reads {"re": .., "im": ..}, writes the Reck netlist.
int decompose_text(const std::string& text, std::ostream& out, std::ostream& err);

/// Oracle suites; one PASS/FAIL line each.
int run_selftest(std::ostream& out);

}  // namespace ebitsim
