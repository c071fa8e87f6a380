#include "dglab/compare.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>

#include <json.hpp>

#include "dglab/csv.hpp"
#include "dglab/diagnostics.hpp"
#include "dglab/errors.hpp"
#include "dglab/scenarios.hpp"

namespace dglab {

namespace {

using nlohmann::json;

struct LoadedRun {
  std::string dir;
  RunConfig config;
  double snapshot_time = 0.0;
  CsvTable snapshot;
};

LoadedRun load_run(const std::string& dir) {
  namespace fs = std::filesystem;
  LoadedRun run;
  run.dir = dir;

  fs::path meta_path = fs::path(dir) / "meta.json";
  std::ifstream meta_in(meta_path);
  if (!meta_in) {
    throw ConfigError("compare: cannot open '" + meta_path.string() + "'");
  }
  json meta;
  try {
    meta = json::parse(meta_in);
  } catch (const json::parse_error& e) {
    throw ConfigError("compare: bad meta.json in '" + dir + "': " + e.what());
  }
  if (!meta.contains("config")) {
    throw ConfigError("compare: meta.json in '" + dir + "' has no config echo");
  }
  run.config = load_config_string(meta["config"].dump());

  // Latest snapshot_t<time>.csv decides what gets compared.
  double best_t = -1.0;
  fs::path best_path;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("solution_t", 0) != 0 || name.size() < 15) continue;
    if (name.substr(name.size() - 4) != ".csv") continue;
    std::string t_text = name.substr(10, name.size() - 14);
    try {
      double t = std::stod(t_text);
      if (t > best_t) {
        best_t = t;
        best_path = entry.path();
      }
    } catch (const std::exception&) {
      continue;
    }
  }
  if (best_t < 0.0) {
    throw ConfigError("compare: no solution_t*.csv snapshots in '" + dir + "'");
  }
  run.snapshot_time = best_t;
  run.snapshot = read_csv(best_path.string());
  return run;
}

// Per-variable reference values at x; columns it cannot provide are skipped.
using ReferenceFn =
    std::function<bool(const std::string& column, double x, double& value)>;

ReferenceFn exact_reference(const LoadedRun& run) {
  const RunConfig& c = run.config;
  const double t = run.snapshot_time;
  if (c.scenario == "sod") {
    RiemannProblem prob = make_riemann_problem(c);
    Euler euler;
    return [prob, euler, t](const std::string& column, double x,
                            double& value) {
      PrimitiveState s = sod_exact(x, t, prob);
      if (column == "rho") value = s.rho;
      else if (column == "m") value = s.rho * s.v;
      else if (column == "E") value = euler.from_primitive(s.rho, s.v, s.P)[2];
      else if (column == "v") value = s.v;
      else if (column == "P") value = s.P;
      else return false;
      return true;
    };
  }
  if (!scenario_is_euler(c.scenario)) {
    auto profile = make_advection_profile(c);
    double xl = c.mesh.x_left, xr = c.mesh.x_right;
    return [profile, t, xl, xr](const std::string& column, double x,
                                double& value) {
      if (column != "u") return false;
      value = advection_exact(profile, t, x, xl, xr);
      return true;
    };
  }
  throw ConfigError("compare: scenario '" + c.scenario +
                    "' has no exact reference; pass a run directory instead");
}

ReferenceFn directory_reference(const std::string& dir,
                                const LoadedRun& against) {
  auto ref = std::make_shared<LoadedRun>(load_run(dir));
  if (ref->config.scenario != against.config.scenario) {
    throw ConfigError("compare: reference scenario '" +
                      ref->config.scenario + "' does not match '" +
                      against.config.scenario + "'");
  }
  return [ref](const std::string& column, double x, double& value) {
    int col = ref->snapshot.column(column);
    if (col < 0 || column == "eps") return false;
    const auto& xs = ref->snapshot.values.col(0);
    const auto& ys = ref->snapshot.values.col(col);
    const Eigen::Index n = xs.size();
    if (x <= xs[0]) {
      value = ys[0];
      return true;
    }
    if (x >= xs[n - 1]) {
      value = ys[n - 1];
      return true;
    }
    // snapshot x columns are sorted; linear interpolation between neighbors
    Eigen::Index lo = 0, hi = n - 1;
    while (hi - lo > 1) {
      Eigen::Index mid = (lo + hi) / 2;
      if (xs[mid] <= x) lo = mid;
      else hi = mid;
    }
    double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    value = (1.0 - w) * ys[lo] + w * ys[hi];
    return true;
  };
}

RunComparison analyze(const LoadedRun& run, const ReferenceFn& reference) {
  RunComparison out;
  out.dir = run.dir;
  out.h = (run.config.mesh.x_right - run.config.mesh.x_left) /
          run.config.mesh.elements;

  const CsvTable& snap = run.snapshot;
  const auto& xs = snap.values.col(0);
  const Eigen::Index n = xs.size();
  const double dx = (n > 1) ? xs[1] - xs[0] : 0.0;

  for (size_t c = 1; c < snap.header.size(); ++c) {
    const std::string& column = snap.header[c];
    if (column == "eps") continue;
    double probe;
    if (!reference(column, xs[0], probe)) continue;
    NormTriple norms;
    for (Eigen::Index r = 0; r < n; ++r) {
      double ref_value;
      reference(column, xs[r], ref_value);
      double d = std::abs(snap.values(r, c) - ref_value);
      norms.l1 += dx * d;
      norms.l2 += dx * d * d;
      norms.linf = std::max(norms.linf, d);
    }
    norms.l2 = std::sqrt(norms.l2);
    out.norms[column] = norms;
  }

  // Primary variable (first value column): overshoot/undershoot beyond the
  // reference range, and 10->90% widths of the reference's jumps.
  const std::string primary = snap.header[1];
  double probe;
  if (!reference(primary, xs[0], probe)) return out;

  Eigen::VectorXd ref_vals(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    reference(primary, xs[r], ref_vals[r]);
  }
  double ref_min = ref_vals.minCoeff();
  double ref_max = ref_vals.maxCoeff();
  const auto& run_vals = snap.values.col(1);

  // Jump detection on the reference samples: adjacent differences larger
  // than a tenth of the full range, merged into contiguous transitions.
  const double threshold = 0.1 * (ref_max - ref_min);
  if (threshold > 0.0) {
    Eigen::Index r = 0;
    while (r + 1 < n) {
      if (std::abs(ref_vals[r + 1] - ref_vals[r]) <= threshold) {
        ++r;
        continue;
      }
      Eigen::Index start = r;
      while (r + 1 < n && std::abs(ref_vals[r + 1] - ref_vals[r]) > threshold) {
        ++r;
      }
      JumpMetric jump;
      jump.x = 0.5 * (xs[start] + xs[r]);
      jump.level_low = ref_vals[start];
      jump.level_high = ref_vals[r];

      // 10->90% transition width of the run profile inside a window around
      // the jump. Progress alpha runs 0 at the left level to 1 at the right
      // level regardless of jump direction.
      const double window = 3.0 * out.h;
      const double denom = jump.level_high - jump.level_low;
      double x10 = jump.x - window, x90 = jump.x + window;
      bool found10 = false, found90 = false;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (xs[k] < jump.x - window || xs[k] > jump.x + window) continue;
        double alpha = (run_vals[k] - jump.level_low) / denom;
        if (!found10 && alpha >= 0.1) {
          x10 = xs[k];
          found10 = true;
        }
        if (found10 && !found90 && alpha >= 0.9) {
          x90 = xs[k];
          found90 = true;
          break;
        }
      }
      jump.width_cells =
          (found10 && found90) ? (x90 - x10) / out.h : 2.0 * window / out.h;
      out.jumps.push_back(jump);
      ++r;
    }
  }

  // Overshoot/undershoot beyond the reference range, taken near the
  // discontinuities (within 1.5 cells of a detected jump): the spurious
  // bumps a captured jump leaves next to itself. Ripples that drifted far
  // into smooth regions are a different artifact and would drown out the
  // jump-local signal. A smooth reference has no jump to blame, so there
  // the whole domain counts.
  const double radius = 1.5 * out.h;
  for (Eigen::Index k = 0; k < n; ++k) {
    bool near = out.jumps.empty();
    for (const auto& jump : out.jumps) {
      if (std::abs(xs[k] - jump.x) <= radius) {
        near = true;
        break;
      }
    }
    if (!near) continue;
    out.overshoot = std::max(out.overshoot, run_vals[k] - ref_max);
    out.undershoot = std::max(out.undershoot, ref_min - run_vals[k]);
  }
  return out;
}

json norms_to_json(const std::map<std::string, NormTriple>& norms) {
  json j = json::object();
  for (const auto& [name, n] : norms) {
    j[name] = {{"l1", n.l1}, {"l2", n.l2}, {"linf", n.linf}};
  }
  return j;
}

json run_to_json(const RunComparison& rc) {
  json j;
  j["dir"] = rc.dir;
  j["h"] = rc.h;
  j["norms"] = norms_to_json(rc.norms);
  j["overshoot"] = rc.overshoot;
  j["undershoot"] = rc.undershoot;
  j["jumps"] = json::array();
  for (const auto& jump : rc.jumps) {
    j["jumps"].push_back({{"x", jump.x},
                          {"level_low", jump.level_low},
                          {"level_high", jump.level_high},
                          {"width_cells", jump.width_cells}});
  }
  return j;
}

}  // namespace

CompareReport compare_runs(const std::string& dir_a, const std::string& dir_b,
                           const std::string& reference) {
  LoadedRun a = load_run(dir_a);
  LoadedRun b = load_run(dir_b);
  if (a.config.scenario != b.config.scenario) {
    throw ConfigError("compare: scenario mismatch ('" + a.config.scenario +
                      "' vs '" + b.config.scenario + "')");
  }
  if (a.config.preset_variant != b.config.preset_variant) {
    throw ConfigError("compare: preset_variant mismatch");
  }
  if (std::abs(a.snapshot_time - b.snapshot_time) > 1e-9) {
    throw ConfigError("compare: final snapshot times differ");
  }

  CompareReport report;
  report.scenario = a.config.scenario;
  report.time = a.snapshot_time;
  report.reference = reference;

  ReferenceFn ref = (reference == "exact") ? exact_reference(a)
                                           : directory_reference(reference, a);
  report.a = analyze(a, ref);
  report.b = analyze(b, ref);

  // Direct A-vs-B difference on A's grid for every shared value column.
  ReferenceFn b_fn = directory_reference(dir_b, a);
  const auto& xs = a.snapshot.values.col(0);
  const double dx = (xs.size() > 1) ? xs[1] - xs[0] : 0.0;
  for (size_t c = 1; c < a.snapshot.header.size(); ++c) {
    const std::string& column = a.snapshot.header[c];
    if (column == "eps") continue;
    double probe;
    if (!b_fn(column, xs[0], probe)) continue;
    NormTriple norms;
    for (Eigen::Index r = 0; r < xs.size(); ++r) {
      double vb;
      b_fn(column, xs[r], vb);
      double d = std::abs(a.snapshot.values(r, c) - vb);
      norms.l1 += dx * d;
      norms.l2 += dx * d * d;
      norms.linf = std::max(norms.linf, d);
    }
    norms.l2 = std::sqrt(norms.l2);
    report.a_vs_b[column] = norms;
  }

  json doc;
  doc["scenario"] = report.scenario;
  doc["time"] = report.time;
  doc["reference"] = report.reference;
  doc["a"] = run_to_json(report.a);
  doc["b"] = run_to_json(report.b);
  doc["a_vs_b"] = norms_to_json(report.a_vs_b);
  report.rendered = doc.dump(2) + "\n";
  return report;
}

}  // namespace dglab
