#ifndef DGLAB_COMPARE_HPP
#define DGLAB_COMPARE_HPP

#include <map>
#include <string>
#include <vector>

namespace dglab {

// A/B comparison of two run directories against a reference (the exact
// solution or a third run directory). Works purely from the emitted files,
// so anything the CLI produced can be compared later.

struct JumpMetric {
  double x = 0.0;            // reference jump location
  double level_low = 0.0;    // reference value left of the jump
  double level_high = 0.0;   // reference value right of the jump
  double width_cells = 0.0;  // 10% -> 90% transition width, in cells
};

struct NormTriple {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

struct RunComparison {
  std::string dir;
  double h = 0.0;  // element width of this run
  std::map<std::string, NormTriple> norms;  // per variable, vs reference
  double overshoot = 0.0;   // beyond the reference maximum (primary variable)
  double undershoot = 0.0;  // below the reference minimum
  std::vector<JumpMetric> jumps;
};

struct CompareReport {
  std::string scenario;
  double time = 0.0;
  std::string reference;  // "exact" or a directory path
  RunComparison a, b;
  std::map<std::string, NormTriple> a_vs_b;  // direct difference per variable
  std::string rendered;                      // the JSON document
};

/// reference = "exact" (advection/sod scenarios) or a run directory whose
/// final snapshot acts as ground truth. Throws ConfigError on scenario or
/// snapshot-time mismatches and for scenarios without an exact solution.
CompareReport compare_runs(const std::string& dir_a, const std::string& dir_b,
                           const std::string& reference = "exact");

}  // namespace dglab

#endif
