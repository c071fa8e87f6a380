#include <benchmark/benchmark.h>

#include "dglab/basis.hpp"
#include "dglab/equations.hpp"
#include "dglab/field.hpp"
#include "dglab/mesh.hpp"
#include "dglab/semidisc.hpp"
#include "dglab/sensor.hpp"
#include "dglab/timeint.hpp"
#include "dglab/viscosity.hpp"

#include <cmath>

namespace {

using namespace dglab;

struct AdvectionSetup {
  ReferenceElement elem = build_reference_element(9);
  Mesh mesh = make_mesh(0.0, 1.0, 20, BoundaryKind::periodic);
  LinearAdvection law;
  Field field = project_initial_condition(
      [](double x) {
        Eigen::VectorXd u(1);
        u[0] = std::sin(2 * M_PI * x) + 0.3 * std::cos(6 * M_PI * x);
        return u;
      },
      mesh, elem, 1);
};

struct SodSetup {
  ReferenceElement elem = build_reference_element(5);
  Mesh mesh;
  Euler law;
  Field field;

  SodSetup() {
    mesh = make_mesh(0.0, 1.0, 40, BoundaryKind::dirichlet_outflow);
    auto ic = [&](double x) {
      return x < 0.5 ? law.from_primitive(1.0, 0.0, 1.0)
                     : law.from_primitive(0.125, 0.0, 0.1);
    };
    mesh.ghost_left = ic(0.0);
    mesh.ghost_right = ic(1.0);
    field = project_initial_condition(ic, mesh, elem, 3);
  }
};

void BM_BuildReferenceElement(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_reference_element(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildReferenceElement)->Arg(5)->Arg(9)->Arg(15);

void BM_HyperbolicRhs(benchmark::State& state) {
  AdvectionSetup s;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hyperbolic_rhs(s.field, s.law, FluxKind::upwind, s.mesh, s.elem));
  }
}
BENCHMARK(BM_HyperbolicRhs);

void BM_ViscousRhs(benchmark::State& state) {
  AdvectionSetup s;
  Eigen::VectorXd strengths = Eigen::VectorXd::Constant(20, 0.01);
  ViscosityField visc = build_viscosity_field(
      strengths, make_distribution(ViscosityKind::super_gaussian), s.mesh,
      s.elem);
  for (auto _ : state) {
    benchmark::DoNotOptimize(viscous_rhs(s.field, visc, s.mesh, s.elem));
  }
}
BENCHMARK(BM_ViscousRhs);

void BM_SensorSweep(benchmark::State& state) {
  AdvectionSetup s;
  SensorConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sense(s.field, s.law, config, s.mesh, s.elem));
  }
}
BENCHMARK(BM_SensorSweep);

void BM_ModalFilterStep(benchmark::State& state) {
  AdvectionSetup s;
  Eigen::VectorXd strengths = Eigen::VectorXd::Constant(20, 0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        modal_filter_step(s.field, strengths, 1e-3, s.mesh, s.elem));
  }
}
BENCHMARK(BM_ModalFilterStep);

void BM_SodFullStep(benchmark::State& state) {
  SodSetup s;
  SensorConfig config;
  config.c = 4.0;
  for (auto _ : state) {
    SensorOutput out = sense(s.field, s.law, config, s.mesh, s.elem);
    ViscosityField visc = build_viscosity_field(
        out.strength, make_distribution(ViscosityKind::super_gaussian), s.mesh,
        s.elem);
    Field next = ssprk33_step(s.field, 1e-4, [&](const Field& u) {
      return full_rhs(u, s.law, FluxKind::local_lax_friedrichs, visc, s.mesh,
                      s.elem);
    });
    benchmark::DoNotOptimize(next);
  }
}
BENCHMARK(BM_SodFullStep);

}  // namespace

BENCHMARK_MAIN();
