#ifndef DGLAB_SCENARIOS_HPP
#define DGLAB_SCENARIOS_HPP

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dglab/config.hpp"
#include "dglab/diagnostics.hpp"
#include "dglab/equations.hpp"

namespace dglab {

// The scenario catalogue. Each scenario fixes the conservation law, the
// initial condition, and the default numerical parameters of one experiment.

struct ScenarioInfo {
  std::string name;
  std::string description;
};

const std::vector<ScenarioInfo>& list_scenarios();
bool is_known_scenario(const std::string& name);
bool scenario_is_euler(const std::string& name);

/// The conservation law the scenario runs on.
std::unique_ptr<ConservationLaw> make_scenario_law(const RunConfig& config);

/// Initial condition in conserved variables, honoring preset_variant.
std::function<Eigen::VectorXd(double)> make_initial_condition(
    const RunConfig& config);

/// Scalar initial profile for the advection scenarios (used by the exact
/// reference); throws for Euler scenarios.
std::function<double(double)> make_advection_profile(const RunConfig& config);

/// Riemann data of the sod scenario (honors preset_variant); throws for
/// anything else.
RiemannProblem make_riemann_problem(const RunConfig& config);

}  // namespace dglab

#endif
