#include "dglab/scenarios.hpp"

#include <cmath>

#include "dglab/errors.hpp"

namespace dglab {

const std::vector<ScenarioInfo>& list_scenarios() {
  static const std::vector<ScenarioInfo> scenarios = {
      {"advection_square",
       "periodic linear advection of a square wave on [0,1] (I=20, p=9)"},
      {"advection_sine",
       "periodic linear advection of sin(2 pi x) on [0,1] (I=20, p=9)"},
      {"advection_fig5",
       "square-wave advection on a coarse mesh (I=12, p=10) for "
       "distribution comparisons"},
      {"sod", "Sod shock tube on [0,1] to t=0.2 (I=40, p=5)"},
      {"shu_osher",
       "Shu-Osher shock/sine interaction on [-5,5] to t=1.8 (I=80, p=5)"},
  };
  return scenarios;
}

bool is_known_scenario(const std::string& name) {
  for (const auto& s : list_scenarios()) {
    if (s.name == name) return true;
  }
  return false;
}

bool scenario_is_euler(const std::string& name) {
  return name == "sod" || name == "shu_osher";
}

std::unique_ptr<ConservationLaw> make_scenario_law(const RunConfig& config) {
  if (scenario_is_euler(config.scenario)) return std::make_unique<Euler>();
  return std::make_unique<LinearAdvection>(1.0);
}

std::function<double(double)> make_advection_profile(const RunConfig& config) {
  if (config.scenario == "advection_sine") {
    return [](double x) { return std::sin(2.0 * M_PI * x); };
  }
  if (config.scenario == "advection_square" ||
      config.scenario == "advection_fig5") {
    return [](double x) { return (x >= 0.25 && x <= 0.75) ? 1.0 : 0.0; };
  }
  throw ConfigError("scenario '" + config.scenario +
                    "' has no scalar advection profile");
}

RiemannProblem make_riemann_problem(const RunConfig& config) {
  if (config.scenario != "sod") {
    throw ConfigError("scenario '" + config.scenario +
                      "' is not a Riemann problem");
  }
  RiemannProblem prob = sod_problem();
  if (config.preset_variant == "paper_literal") prob.left.v = 1.0;
  return prob;
}

std::function<Eigen::VectorXd(double)> make_initial_condition(
    const RunConfig& config) {
  if (!scenario_is_euler(config.scenario)) {
    auto profile = make_advection_profile(config);
    return [profile](double x) {
      Eigen::VectorXd u(1);
      u[0] = profile(x);
      return u;
    };
  }
  Euler euler;
  if (config.scenario == "sod") {
    RiemannProblem prob = make_riemann_problem(config);
    return [euler, prob](double x) {
      const PrimitiveState& s = x < prob.x0 ? prob.left : prob.right;
      return euler.from_primitive(s.rho, s.v, s.P);
    };
  }
  // shu_osher: a Mach-3 shock running into a sinusoidal density field.
  const bool literal = (config.preset_variant == "paper_literal");
  const double split = literal ? 0.5 : -4.0;
  const double wave_number = literal ? 5.0 * M_PI : 5.0;
  return [euler, split, wave_number](double x) {
    if (x < split) return euler.from_primitive(3.857143, 2.629369, 10.33333);
    return euler.from_primitive(1.0 + 0.2 * std::sin(wave_number * x), 0.0, 1.0);
  };
}

}  // namespace dglab
