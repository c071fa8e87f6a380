#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dglab/config.hpp"
#include "dglab/csv.hpp"
#include "dglab/equations.hpp"
#include "dglab/errors.hpp"
#include "dglab/scenarios.hpp"

using namespace dglab;

TEST_CASE("csv: write, read back, and column lookup") {
  const std::string path = "test_config_table.csv";
  std::vector<std::string> header = {"x", "rho", "v"};
  Eigen::MatrixXd values(3, 3);
  values << 0.0, 1.0, -0.5,
      0.1, 0.875, 0.25,
      0.2, 1.0 / 3.0, 1e-17;
  write_csv(path, header, values);
  CsvTable table = read_csv(path);
  REQUIRE(table.header.size() == 3);
  CHECK(table.header[1] == "rho");
  REQUIRE(table.values.rows() == 3);
  REQUIRE(table.values.cols() == 3);
  // 17 significant digits round-trip doubles exactly
  CHECK((table.values - values).cwiseAbs().maxCoeff() == 0.0);
  CHECK(table.column("x") == 0);
  CHECK(table.column("v") == 2);
  CHECK(table.column("missing") == -1);
  std::remove(path.c_str());

  CHECK(csv_format(0.5) == "0.5");
  CHECK(csv_format(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("csv: malformed inputs") {
  const std::string path = "test_config_bad.csv";
  SUBCASE("ragged row") {
    std::ofstream out(path);
    out << "a,b\n1.0,2.0\n3.0\n";
    out.close();
    CHECK_THROWS_AS(read_csv(path), std::runtime_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_csv("does_not_exist_anywhere.csv"),
                    std::runtime_error);
  }
  std::remove(path.c_str());
}

TEST_CASE("default_config: scenario presets") {
  RunConfig sod = default_config("sod");
  CHECK(sod.mesh.elements == 40);
  CHECK(sod.degree == 5);
  CHECK(sod.flux == "local_lax_friedrichs");
  CHECK(sod.mesh.boundary == "dirichlet_outflow");
  CHECK(sod.time.final_time == 0.2);
  CHECK(sod.sensor.c == 4.0);
  CHECK(sod.viscosity.kind == "super_gaussian");
  CHECK(sod.preset_variant == "classical");
  REQUIRE(sod.output.snapshot_times.size() == 2);
  CHECK(sod.output.snapshot_times[0] == 0.0);
  CHECK(sod.output.snapshot_times[1] == 0.2);

  RunConfig square = default_config("advection_square");
  CHECK(square.mesh.elements == 20);
  CHECK(square.degree == 9);
  CHECK(square.flux == "upwind");
  CHECK(square.mesh.boundary == "periodic");
  CHECK(square.sensor.c == 1.0);
  CHECK(square.time.final_time == 1.0);

  RunConfig fig5 = default_config("advection_fig5");
  CHECK(fig5.mesh.elements == 12);
  CHECK(fig5.degree == 10);
  CHECK(fig5.time.final_time == 0.0375);

  RunConfig shu = default_config("shu_osher");
  CHECK(shu.mesh.elements == 80);
  CHECK(shu.mesh.x_left == -5.0);
  CHECK(shu.mesh.x_right == 5.0);
  CHECK(shu.time.final_time == 1.8);

  CHECK_THROWS_AS(default_config("kelvin_helmholtz"), ConfigError);
}

TEST_CASE("load_config_string") {
  SUBCASE("minimal document inherits the scenario defaults") {
    RunConfig c = load_config_string(R"({"scenario": "sod"})");
    CHECK(c.mesh.elements == 40);
    CHECK(c.degree == 5);
    CHECK(c.viscosity.kind == "super_gaussian");
    CHECK(c.time.final_time == 0.2);
  }
  SUBCASE("nested keys merge over defaults") {
    RunConfig c = load_config_string(
        R"({"scenario": "sod", "mesh": {"elements": 80},
            "sensor": {"kappa": 2.0}})");
    CHECK(c.mesh.elements == 80);
    CHECK(c.mesh.boundary == "dirichlet_outflow");  // untouched default
    CHECK(c.sensor.kappa == 2.0);
    CHECK(c.sensor.c == 4.0);
  }
  SUBCASE("unknown keys are named with their dotted path") {
    CHECK_THROWS_WITH_AS(
        load_config_string(R"({"scenario": "sod", "mesh": {"cells": 4}})"),
        doctest::Contains("mesh.cells"), ConfigError);
    CHECK_THROWS_AS(
        load_config_string(R"({"scenario": "sod", "viscocity": {}})"),
        ConfigError);
  }
  SUBCASE("malformed JSON") {
    CHECK_THROWS_AS(load_config_string("{"), ConfigError);
    CHECK_THROWS_AS(load_config_string("[1, 2]"), ConfigError);
  }
  SUBCASE("missing scenario") {
    CHECK_THROWS_AS(load_config_string(R"({"degree": 3})"), ConfigError);
  }
  SUBCASE("validation failures") {
    CHECK_THROWS_AS(
        load_config_string(R"({"scenario": "sod", "time": {"cfl": -0.1}})"),
        ConfigError);
    CHECK_THROWS_AS(
        load_config_string(R"({"scenario": "sod", "flux": "upwind"})"),
        ConfigError);
    CHECK_THROWS_AS(
        load_config_string(R"({"scenario": "sod", "degree": 0})"),
        ConfigError);
    CHECK_THROWS_AS(
        load_config_string(
            R"({"scenario": "sod", "time": {"mode": "split_filter"}})"),
        ConfigError);  // split filter needs the legendre shape
    CHECK_THROWS_AS(
        load_config_string(
            R"({"scenario": "sod", "output": {"snapshot_times": [0.5]}})"),
        ConfigError);  // past final_time = 0.2
  }
  SUBCASE("split filter with the legendre shape is accepted") {
    RunConfig c = load_config_string(
        R"({"scenario": "advection_square",
            "time": {"mode": "split_filter"},
            "viscosity": {"kind": "legendre"}})");
    CHECK(c.time.mode == "split_filter");
  }
  SUBCASE("viscosity kind 'none' disables the term but passes validation") {
    RunConfig c = load_config_string(
        R"({"scenario": "sod", "viscosity": {"kind": "none"}})");
    CHECK(c.viscosity.kind == "none");
  }
}

TEST_CASE("load_config_string: --set overrides") {
  SUBCASE("values by dotted path, typed by JSON parse") {
    RunConfig c = load_config_string(
        R"({"scenario": "sod"})",
        {"mesh.elements=160", "time.cfl=0.2", "viscosity.kind=legendre",
         "parallel.elements=true"});
    CHECK(c.mesh.elements == 160);
    CHECK(c.time.cfl == 0.2);
    CHECK(c.viscosity.kind == "legendre");
    CHECK(c.parallel_elements);
  }
  SUBCASE("scenario itself can come from an override") {
    RunConfig c = load_config_string(R"({})", {"scenario=advection_sine"});
    CHECK(c.scenario == "advection_sine");
    CHECK(c.degree == 9);
  }
  SUBCASE("the override wins over the document") {
    RunConfig c = load_config_string(R"({"scenario": "sod", "degree": 3})",
                                     {"degree=7"});
    CHECK(c.degree == 7);
  }
  SUBCASE("bad override paths and shapes") {
    CHECK_THROWS_AS(
        load_config_string(R"({"scenario": "sod"})", {"mesh.cells=4"}),
        ConfigError);
    CHECK_THROWS_AS(load_config_string(R"({"scenario": "sod"})", {"mesh=4"}),
                    ConfigError);  // addresses a section
    CHECK_THROWS_AS(load_config_string(R"({"scenario": "sod"})", {"degree"}),
                    ConfigError);  // no '='
  }
  SUBCASE("shortening the run keeps the default snapshots in range") {
    RunConfig c =
        load_config_string(R"({"scenario": "sod"})", {"time.final_time=0.1"});
    REQUIRE(c.output.snapshot_times.size() == 2);
    CHECK(c.output.snapshot_times[1] == 0.1);
    // but an explicit snapshot list is preserved verbatim
    RunConfig d = load_config_string(
        R"({"scenario": "sod",
            "time": {"final_time": 0.1},
            "output": {"snapshot_times": [0.0, 0.05]}})");
    CHECK(d.output.snapshot_times[1] == 0.05);
  }
}

TEST_CASE("config_to_json round trip") {
  RunConfig c = default_config("shu_osher");
  c.sensor.kappa = 1.75;
  c.output.snapshot_times = {0.0, 0.9, 1.8};
  std::string text = config_to_json(c);
  RunConfig back = load_config_string(text);
  CHECK(back.scenario == c.scenario);
  CHECK(back.sensor.kappa == 1.75);
  CHECK(back.mesh.elements == 80);
  REQUIRE(back.output.snapshot_times.size() == 3);
  CHECK(back.output.snapshot_times[1] == 0.9);
  CHECK(config_to_json(back) == text);  // canonical form is a fixed point
}

TEST_CASE("scenarios") {
  SUBCASE("the five presets are listed and recognized") {
    const auto& all = list_scenarios();
    REQUIRE(all.size() == 5);
    for (const char* name : {"advection_square", "advection_sine",
                             "advection_fig5", "sod", "shu_osher"}) {
      CHECK(is_known_scenario(name));
    }
    CHECK_FALSE(is_known_scenario("blast_wave"));
    CHECK(scenario_is_euler("sod"));
    CHECK(scenario_is_euler("shu_osher"));
    CHECK_FALSE(scenario_is_euler("advection_sine"));
  }
  SUBCASE("law factory matches the scenario") {
    RunConfig adv = default_config("advection_square");
    CHECK(make_scenario_law(adv)->n_vars() == 1);
    RunConfig sod = default_config("sod");
    CHECK(make_scenario_law(sod)->n_vars() == 3);
  }
  SUBCASE("square profile levels and edges") {
    RunConfig c = default_config("advection_square");
    auto profile = make_advection_profile(c);
    CHECK(profile(0.1) == 0.0);
    CHECK(profile(0.25) == 1.0);
    CHECK(profile(0.5) == 1.0);
    CHECK(profile(0.75) == 1.0);
    CHECK(profile(0.8) == 0.0);
    RunConfig sod = default_config("sod");
    CHECK_THROWS_AS(make_advection_profile(sod), ConfigError);
  }
  SUBCASE("sod initial conserved states") {
    RunConfig c = default_config("sod");
    auto ic = make_initial_condition(c);
    Eigen::VectorXd left = ic(0.25);
    CHECK(left[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(left[1] == 0.0);
    CHECK(left[2] == doctest::Approx(2.5).epsilon(1e-15));
    Eigen::VectorXd right = ic(0.75);
    CHECK(right[0] == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(right[2] == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("the literal preset moves the left state") {
    RunConfig c = default_config("sod");
    c.preset_variant = "paper_literal";
    auto ic = make_initial_condition(c);
    Eigen::VectorXd left = ic(0.25);
    CHECK(left[1] == doctest::Approx(1.0).epsilon(1e-15));   // rho v
    CHECK(left[2] == doctest::Approx(3.0).epsilon(1e-15));   // E + kinetic
    Eigen::VectorXd right = ic(0.75);
    CHECK(right[1] == 0.0);  // right state unchanged
  }
  SUBCASE("shu_osher classical left state") {
    RunConfig c = default_config("shu_osher");
    auto ic = make_initial_condition(c);
    Eigen::VectorXd left = ic(-4.5);
    CHECK(left[0] == doctest::Approx(3.857143).epsilon(1e-12));
    CHECK(left[1] == doctest::Approx(10.141852232767).epsilon(1e-9));
    CHECK(left[2] == doctest::Approx(39.166660931709167).epsilon(1e-9));
    // downstream density rides the sine: rho(0) = 1, rho(pi/10) = 1.2
    Eigen::VectorXd mid = ic(0.0);
    CHECK(mid[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ic(M_PI / 10.0)[0] == doctest::Approx(1.2).epsilon(1e-12));
    // and the literal preset moves the split and the wave number
    c.preset_variant = "paper_literal";
    auto lit = make_initial_condition(c);
    CHECK(lit(0.4)[0] == doctest::Approx(3.857143).epsilon(1e-12));
    CHECK(lit(0.7)[0] ==
          doctest::Approx(1.0 + 0.2 * std::sin(5.0 * M_PI * 0.7))
              .epsilon(1e-12));
  }
}
