#ifndef DGLAB_RUNNER_HPP
#define DGLAB_RUNNER_HPP

#include <string>

#include "dglab/config.hpp"

namespace dglab {

// Drives one configured scenario to its final time and writes the output
// directory: solution_t<time>.csv snapshots, trace.csv, meta.json.

struct RunResult {
  int exit_code = 0;  // 0 completed, 1 blow-up (last good snapshot flushed)
  std::string output_dir;
  double time_reached = 0.0;
  int steps = 0;
  std::string message;  // failure description when exit_code != 0
};

/// Executes the run. The DGLAB_OUT environment variable, when set, overrides
/// config.output.directory. Throws ConfigError for configuration problems
/// (the CLI maps those to exit code 2); numerical blow-up is reported through
/// the result, not an exception.
RunResult run_scenario(const RunConfig& config);

}  // namespace dglab

#endif
