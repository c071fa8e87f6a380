#include "dglab/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "dglab/csv.hpp"
#include "dglab/diagnostics.hpp"
#include "dglab/errors.hpp"
#include "dglab/scenarios.hpp"
#include "dglab/semidisc.hpp"
#include "dglab/sensor.hpp"
#include "dglab/timeint.hpp"
#include "dglab/viscosity.hpp"

namespace dglab {

namespace {

std::vector<std::string> variable_names(const RunConfig& config) {
  if (scenario_is_euler(config.scenario)) return {"rho", "m", "E"};
  return {"u"};
}

uint64_t fnv1a(const std::string& text) {
  uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string snapshot_filename(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "solution_t%g.csv", t);
  return buf;
}

// Everything the stepping loop shares, bundled so the snapshot/trace helpers
// stay readable.
struct RunState {
  RunConfig config;
  std::unique_ptr<ConservationLaw> law;
  Mesh mesh;
  ReferenceElement elem;
  Field field;
  FluxKind flux = FluxKind::upwind;
  Integrator integrator = Integrator::ssprk33;
  SensorConfig sensor_config;
  ViscosityDistribution dist;
  bool viscosity_enabled = true;
  StepControl control;
  bool parallel = false;

  // refreshed each step
  SensorOutput sensed;
  ViscosityField visc;
};

double eps_at(const RunState& rs, int element, double r) {
  if (!rs.viscosity_enabled) return 0.0;
  const ViscosityField& vf = rs.visc;
  switch (vf.distribution.kind) {
    case ViscosityKind::piecewise_constant:
      return vf.strengths[element];
    case ViscosityKind::c0_linear:
      return 0.5 * (1.0 - r) * vf.vertex_values[element] +
             0.5 * (1.0 + r) * vf.vertex_values[element + 1];
    default:
      return vf.strengths[element] * distribution_value(vf.distribution, r);
  }
}

void write_snapshot(const RunState& rs, const std::filesystem::path& dir,
                    const std::string& filename) {
  const bool euler = scenario_is_euler(rs.config.scenario);
  std::vector<std::string> header = {"x"};
  for (const auto& name : variable_names(rs.config)) header.push_back(name);
  if (euler) {
    header.push_back("v");
    header.push_back("P");
  }
  header.push_back("eps");

  Eigen::VectorXd pts = snapshot_points(rs.elem);
  const int per_elem = static_cast<int>(pts.size());
  Eigen::MatrixXd rows(rs.mesh.n_elements * per_elem, header.size());
  const Euler* euler_law =
      euler ? static_cast<const Euler*>(rs.law.get()) : nullptr;
  for (int i = 0; i < rs.mesh.n_elements; ++i) {
    for (int j = 0; j < per_elem; ++j) {
      int row = i * per_elem + j;
      double x = rs.mesh.to_physical(i, pts[j]);
      Eigen::VectorXd state = point_value(rs.field, i, pts[j], rs.elem);
      int col = 0;
      rows(row, col++) = x;
      for (int v = 0; v < state.size(); ++v) rows(row, col++) = state[v];
      if (euler_law != nullptr) {
        rows(row, col++) = euler_law->velocity(state);
        rows(row, col++) = euler_law->pressure(state);
      }
      rows(row, col++) = eps_at(rs, i, pts[j]);
    }
  }
  write_csv((dir / filename).string(), header, rows);
}

void refresh_viscosity(RunState& rs) {
  rs.sensed = sense(rs.field, *rs.law, rs.sensor_config, rs.mesh, rs.elem);
  Eigen::VectorXd strengths = rs.viscosity_enabled
                                  ? rs.sensed.strength
                                  : Eigen::VectorXd::Zero(rs.mesh.n_elements);
  rs.visc = build_viscosity_field(strengths, rs.dist, rs.mesh, rs.elem);
}

}  // namespace

RunResult run_scenario(const RunConfig& config) {
  validate_config(config);

  RunState rs;
  rs.config = config;
  rs.law = make_scenario_law(config);
  rs.mesh = make_mesh(config.mesh.x_left, config.mesh.x_right,
                      config.mesh.elements,
                      parse_boundary_kind(config.mesh.boundary));
  auto ic = make_initial_condition(config);
  if (rs.mesh.boundary == BoundaryKind::dirichlet_outflow) {
    rs.mesh.ghost_left = ic(rs.mesh.x_left);
    rs.mesh.ghost_right = ic(rs.mesh.x_right);
  }
  rs.elem = build_reference_element(config.degree);
  rs.field = project_initial_condition(ic, rs.mesh, rs.elem, rs.law->n_vars());
  rs.flux = parse_flux_kind(config.flux);
  rs.integrator = parse_integrator(config.time.integrator);
  rs.sensor_config.mode = parse_sensor_mode(config.sensor.mode);
  rs.sensor_config.c = config.sensor.c;
  rs.sensor_config.kappa = config.sensor.kappa;
  rs.sensor_config.eps_max_scale = config.sensor.eps_max_scale;
  rs.viscosity_enabled = (config.viscosity.kind != "none");
  {
    // A disabled viscosity still needs a well-formed zero field for dt
    // control and the eps output column.
    ViscosityKind kind = rs.viscosity_enabled
                             ? parse_viscosity_kind(config.viscosity.kind)
                             : ViscosityKind::piecewise_constant;
    rs.dist = (config.viscosity.lambda > 0.0)
                  ? make_distribution(kind, config.viscosity.lambda)
                  : make_distribution(kind);
    rs.dist.eps_machine = config.viscosity.eps_machine;
  }
  rs.control.cfl = config.time.cfl;
  rs.control.cfl_viscous = config.time.cfl_viscous;
  rs.control.fixed_dt = config.time.fixed_dt;
  rs.parallel = config.parallel_elements;

  RunResult result;
  std::string out_dir = config.output.directory;
  if (const char* env = std::getenv("DGLAB_OUT"); env != nullptr && *env) {
    out_dir = env;
  }
  if (out_dir.empty()) {
    throw ConfigError("output.directory is empty (and DGLAB_OUT is unset)");
  }
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory '" + out_dir +
                      "': " + ec.message());
  }
  result.output_dir = dir.string();

  std::vector<double> snapshots = config.output.snapshot_times;
  std::sort(snapshots.begin(), snapshots.end());
  snapshots.erase(std::unique(snapshots.begin(), snapshots.end()),
                  snapshots.end());

  const auto var_names = variable_names(config);
  std::vector<std::string> trace_header = {"t"};
  for (const auto& name : var_names) trace_header.push_back("mass_" + name);
  trace_header.push_back("entropy");
  trace_header.push_back("max_eps");
  trace_header.push_back("flagged");
  trace_header.push_back("dt");
  std::vector<Eigen::VectorXd> trace_rows;

  auto push_trace = [&](double t, double dt) {
    Eigen::VectorXd row(trace_header.size());
    int col = 0;
    row[col++] = t;
    Eigen::VectorXd mass = total_integral(rs.field, rs.elem, rs.mesh);
    for (int v = 0; v < mass.size(); ++v) row[col++] = mass[v];
    row[col++] = total_entropy(rs.field, *rs.law, rs.elem, rs.mesh);
    row[col++] = rs.visc.max_sample();
    row[col++] = double((rs.sensed.strength.array() > 0.0).count());
    row[col++] = dt;
    trace_rows.push_back(row);
  };

  auto flush_outputs = [&](const std::string& status, double wall_ms) {
    Eigen::MatrixXd trace(trace_rows.size(), trace_header.size());
    for (size_t r = 0; r < trace_rows.size(); ++r) {
      trace.row(r) = trace_rows[r].transpose();
    }
    write_csv((dir / "trace.csv").string(), trace_header, trace);

    std::string echo = config_to_json(config);
    nlohmann::json meta;
    meta["config"] = nlohmann::json::parse(echo);
    char id[32];
    std::snprintf(id, sizeof(id), "%016llx",
                  static_cast<unsigned long long>(fnv1a(echo)));
    meta["run_id"] = id;
    meta["status"] = status;
    meta["steps"] = result.steps;
    meta["time_reached"] = result.time_reached;
    meta["wall_ms"] = wall_ms;
    meta["resolved"] = {{"viscosity_lambda", rs.dist.lambda},
                        {"viscosity_alpha", rs.dist.alpha()},
                        {"law", rs.law->name()},
                        {"h", rs.mesh.h()}};
    std::ofstream out(dir / "meta.json", std::ios::binary);
    out << meta.dump(2) << "\n";
  };

  const double T = config.time.final_time;
  auto wall_start = std::chrono::steady_clock::now();
  auto wall_ms_now = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - wall_start)
        .count();
  };

  double t = 0.0;
  try {
    refresh_viscosity(rs);
    push_trace(0.0, 0.0);
    size_t next_snap = 0;
    while (next_snap < snapshots.size() && snapshots[next_snap] <= 1e-12) {
      write_snapshot(rs, dir, snapshot_filename(snapshots[next_snap]));
      ++next_snap;
    }

    auto rhs = [&](const Field& u) {
      if (!rs.viscosity_enabled) {
        return hyperbolic_rhs(u, *rs.law, rs.flux, rs.mesh, rs.elem,
                              rs.parallel);
      }
      if (rs.config.sensor.per_stage) {
        SensorOutput sensed = sense(u, *rs.law, rs.sensor_config, rs.mesh,
                                    rs.elem);
        ViscosityField vf =
            build_viscosity_field(sensed.strength, rs.dist, rs.mesh, rs.elem);
        return full_rhs(u, *rs.law, rs.flux, vf, rs.mesh, rs.elem, rs.parallel);
      }
      return full_rhs(u, *rs.law, rs.flux, rs.visc, rs.mesh, rs.elem,
                      rs.parallel);
    };

    // The split path integrates the viscous part exactly (modal filter), so
    // its step size only answers to the advective CFL; a zero-strength field
    // keeps the parabolic bound out of compute_dt there.
    const bool split = (rs.config.time.mode == "split_filter");
    ViscosityField no_visc = build_viscosity_field(
        Eigen::VectorXd::Zero(rs.mesh.n_elements), rs.dist, rs.mesh, rs.elem);

    while (t < T - 1e-12) {
      refresh_viscosity(rs);
      double dt = compute_dt(rs.field, *rs.law, split ? no_visc : rs.visc,
                             rs.mesh, rs.elem, rs.control);
      dt = std::min(dt, T - t);
      if (next_snap < snapshots.size()) {
        dt = std::min(dt, snapshots[next_snap] - t);
      }

      if (rs.config.time.mode == "split_filter") {
        rs.field = operator_split_advance(rs.field, *rs.law, rs.flux, rs.visc,
                                          dt, rs.mesh, rs.elem, rs.integrator,
                                          rs.parallel);
      } else {
        rs.field = (rs.integrator == Integrator::ssprk33)
                       ? ssprk33_step(rs.field, dt, rhs)
                       : ssprk54_step(rs.field, dt, rhs);
      }
      t += dt;
      ++result.steps;
      result.time_reached = t;

      bool last = t >= T - 1e-12;
      if (result.steps % config.output.trace_every == 0 || last) {
        push_trace(t, dt);
      }
      while (next_snap < snapshots.size() &&
             t >= snapshots[next_snap] - 1e-12) {
        write_snapshot(rs, dir, snapshot_filename(snapshots[next_snap]));
        ++next_snap;
      }
    }
    flush_outputs("ok", wall_ms_now());
    result.exit_code = 0;
  } catch (const BlowUpError& e) {
    // rs.field still holds the last completed step.
    write_snapshot(rs, dir, "solution_blowup.csv");
    flush_outputs("blow_up", wall_ms_now());
    result.exit_code = 1;
    result.message = std::string("blow-up at t = ") + std::to_string(t) +
                     ": " + e.what();
  } catch (const InadmissibleStateError& e) {
    write_snapshot(rs, dir, "solution_blowup.csv");
    flush_outputs("blow_up", wall_ms_now());
    result.exit_code = 1;
    result.message = std::string("inadmissible state at t = ") +
                     std::to_string(t) + ": " + e.what();
  }
  return result;
}

}  // namespace dglab
