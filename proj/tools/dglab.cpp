// Command-line front end: run a configured scenario, compare finished runs,
// or list what can be run. Exit codes: 0 success, 1 numerical failure
// (blow-up), 2 configuration/usage error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dglab/compare.hpp"
#include "dglab/config.hpp"
#include "dglab/errors.hpp"
#include "dglab/runner.hpp"
#include "dglab/scenarios.hpp"

int main(int argc, char** argv) {
  CLI::App app{"1D discontinuous Galerkin solver with swappable "
               "artificial-viscosity shock capturing"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  auto* run_cmd = app.add_subcommand("run", "execute a scenario from a JSON config");
  run_cmd->add_option("config", config_path, "path to the JSON config")->required();
  run_cmd->add_option("--set", overrides,
                      "override a config entry, e.g. --set viscosity.kind=gevrey");

  std::string dir_a, dir_b;
  std::string reference = "exact";
  auto* cmp_cmd = app.add_subcommand("compare", "compare two run directories");
  cmp_cmd->add_option("dir_a", dir_a, "first run directory")->required();
  cmp_cmd->add_option("dir_b", dir_b, "second run directory")->required();
  cmp_cmd->add_option("--reference", reference,
                      "'exact' or a run directory used as ground truth");

  app.add_subcommand("list-scenarios", "list available scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a config error
  }

  try {
    if (run_cmd->parsed()) {
      dglab::RunConfig config = dglab::load_config_file(config_path, overrides);
      dglab::RunResult result = dglab::run_scenario(config);
      if (result.exit_code == 0) {
        std::cout << "wrote " << result.output_dir << " (" << result.steps
                  << " steps to t = " << result.time_reached << ")\n";
      } else {
        std::cerr << "error: " << result.message << "\n";
      }
      return result.exit_code;
    }
    if (cmp_cmd->parsed()) {
      dglab::CompareReport report =
          dglab::compare_runs(dir_a, dir_b, reference);
      std::cout << report.rendered;
      return 0;
    }
    for (const auto& s : dglab::list_scenarios()) {
      std::printf("%-18s %s\n", s.name.c_str(), s.description.c_str());
    }
    return 0;
  } catch (const dglab::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
