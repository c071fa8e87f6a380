#ifndef DGLAB_CONFIG_HPP
#define DGLAB_CONFIG_HPP

#include <string>
#include <vector>

namespace dglab {

// Run configuration: a JSON document with scenario-dependent defaults and a
// dotted-path override layer. Everything the solver pipeline needs is in
// here; unknown keys are rejected at load time.

struct MeshConfig {
  int elements = 20;
  double x_left = 0.0;
  double x_right = 1.0;
  std::string boundary = "periodic";
};

struct TimeConfig {
  std::string integrator = "ssprk33";
  double cfl = 0.38;
  double cfl_viscous = 0.25;
  double final_time = 1.0;
  std::string mode = "unsplit";  // unsplit | split_filter
  double fixed_dt = 0.0;         // > 0 overrides the CFL bounds
};

struct SensorSettings {
  std::string mode = "modified";  // modified | classic
  double c = 1.0;
  double kappa = 1.0;
  double eps_max_scale = 1.0;
  bool per_stage = false;
};

struct ViscositySettings {
  std::string kind = "super_gaussian";  // + "none" to disable the term
  double lambda = 0.0;                  // 0 = per-kind default
  double eps_machine = 1e-16;
};

struct OutputConfig {
  std::string directory;
  std::vector<double> snapshot_times;
  int trace_every = 1;
};

struct RunConfig {
  std::string scenario = "advection_square";
  std::string preset_variant = "classical";  // classical | paper_literal
  MeshConfig mesh;
  int degree = 9;
  std::string flux = "upwind";
  TimeConfig time;
  SensorSettings sensor;
  ViscositySettings viscosity;
  OutputConfig output;
  bool parallel_elements = false;
};

/// Scenario defaults with every field filled in.
RunConfig default_config(const std::string& scenario);

/// Parse + merge over scenario defaults + apply `--set path=value` overrides
/// + validate. Throws ConfigError on parse errors, unknown keys, unknown
/// override paths, or invalid values.
RunConfig load_config_string(const std::string& json_text,
                             const std::vector<std::string>& overrides = {});
RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& overrides = {});

/// Canonical JSON echo of a config (2-space indent, sorted keys) — the exact
/// document written into meta.json and hashed for the run id.
std::string config_to_json(const RunConfig& config);

/// Full validation; throws ConfigError naming the offending key.
void validate_config(const RunConfig& config);

}  // namespace dglab

#endif
