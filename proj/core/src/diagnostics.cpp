#include "dglab/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "dglab/errors.hpp"
#include "dglab/semidisc.hpp"
#include "dglab/timeint.hpp"

namespace dglab {

Eigen::VectorXd total_integral(const Field& field, const ReferenceElement& elem,
                               const Mesh& mesh) {
  const double scale = 0.5 * mesh.h();
  Eigen::VectorXd total = Eigen::VectorXd::Zero(field.n_vars());
  for (int i = 0; i < field.n_elements(); ++i) {
    Eigen::MatrixXd nodal = elem.vandermonde * field.element_block(i);
    total += scale * (nodal.transpose() * elem.quad_weights);
  }
  return total;
}

double total_entropy(const Field& field, const ConservationLaw& law,
                     const ReferenceElement& elem, const Mesh& mesh) {
  const double scale = 0.5 * mesh.h();
  double total = 0.0;
  Eigen::VectorXd state(field.n_vars());
  for (int i = 0; i < field.n_elements(); ++i) {
    Eigen::MatrixXd nodal = elem.vandermonde * field.element_block(i);
    for (int j = 0; j < nodal.rows(); ++j) {
      state = nodal.row(j).transpose();
      law.check_admissible(state);
      total += scale * elem.quad_weights[j] * law.entropy_pair(state).entropy;
    }
  }
  return total;
}

double entropy_rate_estimate(const Field& field, const Field& tendency,
                             const ConservationLaw& law,
                             const ReferenceElement& elem, const Mesh& mesh) {
  // A Gauss rule with p+2 points integrates degree 2p+3, so for scalar laws
  // (U'(u) = u, integrand degree 2p) the estimate is the exact semidiscrete
  // rate -- the element's own GLL rule would be off by the top-mode defect,
  // which has no sign and would spoil the entropy-stability bound.
  QuadratureRule rule = gauss_legendre_rule(elem.degree + 2);
  const int nq = static_cast<int>(rule.nodes.size());
  Eigen::MatrixXd phi(nq, elem.n_coeffs());
  for (int q = 0; q < nq; ++q) {
    Eigen::VectorXd vals = legendre_values(elem.degree, rule.nodes[q]);
    for (int k = 0; k <= elem.degree; ++k) {
      double c = (elem.normalization == BasisNormalization::orthonormal)
                     ? std::sqrt((2.0 * k + 1.0) / 2.0)
                     : 1.0;
      phi(q, k) = c * vals[k];
    }
  }
  const double scale = 0.5 * mesh.h();
  double rate = 0.0;
  Eigen::VectorXd state(field.n_vars());
  for (int i = 0; i < field.n_elements(); ++i) {
    Eigen::MatrixXd nodal = phi * field.element_block(i);
    Eigen::MatrixXd dnodal = phi * tendency.element_block(i);
    for (int j = 0; j < nq; ++j) {
      state = nodal.row(j).transpose();
      rate += scale * rule.weights[j] *
              law.entropy_variables(state).dot(dnodal.row(j).transpose());
    }
  }
  return rate;
}

double advection_exact(const std::function<double(double)>& initial_profile,
                       double t, double x, double x_left, double x_right,
                       double speed) {
  const double L = x_right - x_left;
  double y = std::fmod(x - speed * t - x_left, L);
  if (y < 0.0) y += L;
  return initial_profile(x_left + y);
}

// ---- exact Riemann solution -------------------------------------------------

namespace {

double sound_speed_of(const PrimitiveState& s, double gamma) {
  return std::sqrt(gamma * s.P / s.rho);
}

// Toro-style pressure function f_K(p) and its derivative for one side.
void pressure_function(double p, const PrimitiveState& s, double gamma,
                       double& f, double& df) {
  double a = sound_speed_of(s, gamma);
  if (p > s.P) {  // shock branch
    double A = 2.0 / ((gamma + 1.0) * s.rho);
    double B = (gamma - 1.0) / (gamma + 1.0) * s.P;
    double root = std::sqrt(A / (B + p));
    f = (p - s.P) * root;
    df = root * (1.0 - 0.5 * (p - s.P) / (B + p));
  } else {  // rarefaction branch
    double exponent = (gamma - 1.0) / (2.0 * gamma);
    f = 2.0 * a / (gamma - 1.0) * (std::pow(p / s.P, exponent) - 1.0);
    df = std::pow(p / s.P, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * a);
  }
}

void check_state(const PrimitiveState& s, const char* side) {
  if (!(s.rho > 0.0) || !(s.P > 0.0)) {
    throw InadmissibleStateError(std::string("riemann: non-positive ") +
                                 "density or pressure in " + side + " state");
  }
}

}  // namespace

RiemannProblem sod_problem() {
  RiemannProblem prob;
  prob.left = {1.0, 0.0, 1.0};
  prob.right = {0.125, 0.0, 0.1};
  prob.gamma = 1.4;
  prob.x0 = 0.5;
  return prob;
}

RiemannSolution solve_riemann(const RiemannProblem& problem) {
  const double g = problem.gamma;
  const PrimitiveState& L = problem.left;
  const PrimitiveState& R = problem.right;
  check_state(L, "left");
  check_state(R, "right");

  double aL = sound_speed_of(L, g);
  double aR = sound_speed_of(R, g);
  double dv = R.v - L.v;
  if (2.0 * (aL + aR) / (g - 1.0) <= dv) {
    throw InadmissibleStateError(
        "riemann: initial states generate vacuum (pressure positivity lost)");
  }

  // Newton on f(p) = f_L(p) + f_R(p) + (vR - vL), seeded by the
  // primitive-variable (acoustic) guess.
  double p = 0.5 * (L.P + R.P) - 0.125 * dv * (L.rho + R.rho) * (aL + aR);
  p = std::max(p, 1e-12);
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    double fL, dfL, fR, dfR;
    pressure_function(p, L, g, fL, dfL);
    pressure_function(p, R, g, fR, dfR);
    double f = fL + fR + dv;
    double step = f / (dfL + dfR);
    double p_new = p - step;
    if (p_new <= 0.0) p_new = 0.5 * p;  // keep the iterate positive
    double rel = std::abs(p_new - p) / (0.5 * (p_new + p));
    p = p_new;
    if (rel < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw std::runtime_error("riemann: pressure iteration did not converge");
  }

  RiemannSolution sol;
  sol.problem = problem;
  sol.p_star = p;
  double fL, dfL, fR, dfR;
  pressure_function(p, L, g, fL, dfL);
  pressure_function(p, R, g, fR, dfR);
  sol.v_star = 0.5 * (L.v + R.v) + 0.5 * (fR - fL);

  const double gm = (g - 1.0) / (g + 1.0);
  sol.left_is_shock = p > L.P;
  sol.right_is_shock = p > R.P;

  if (sol.left_is_shock) {
    sol.rho_star_left = L.rho * (p / L.P + gm) / (gm * p / L.P + 1.0);
    double SL = L.v - aL * std::sqrt((g + 1.0) / (2.0 * g) * p / L.P +
                                     (g - 1.0) / (2.0 * g));
    sol.left_head = sol.left_tail = SL;
  } else {
    sol.rho_star_left = L.rho * std::pow(p / L.P, 1.0 / g);
    double a_star = aL * std::pow(p / L.P, (g - 1.0) / (2.0 * g));
    sol.left_head = L.v - aL;
    sol.left_tail = sol.v_star - a_star;
  }

  if (sol.right_is_shock) {
    sol.rho_star_right = R.rho * (p / R.P + gm) / (gm * p / R.P + 1.0);
    double SR = R.v + aR * std::sqrt((g + 1.0) / (2.0 * g) * p / R.P +
                                     (g - 1.0) / (2.0 * g));
    sol.right_head = sol.right_tail = SR;
  } else {
    sol.rho_star_right = R.rho * std::pow(p / R.P, 1.0 / g);
    double a_star = aR * std::pow(p / R.P, (g - 1.0) / (2.0 * g));
    sol.right_head = R.v + aR;
    sol.right_tail = sol.v_star + a_star;
  }
  return sol;
}

PrimitiveState RiemannSolution::sample(double xi) const {
  const double g = problem.gamma;
  const PrimitiveState& L = problem.left;
  const PrimitiveState& R = problem.right;
  double aL = sound_speed_of(L, g);
  double aR = sound_speed_of(R, g);

  if (xi < v_star) {  // left of the contact
    if (left_is_shock) {
      if (xi < left_head) return L;
      return {rho_star_left, v_star, p_star};
    }
    if (xi < left_head) return L;
    if (xi > left_tail) return {rho_star_left, v_star, p_star};
    // inside the left rarefaction fan
    double factor = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * aL) * (L.v - xi);
    PrimitiveState s;
    s.rho = L.rho * std::pow(factor, 2.0 / (g - 1.0));
    s.v = 2.0 / (g + 1.0) * (aL + 0.5 * (g - 1.0) * L.v + xi);
    s.P = L.P * std::pow(factor, 2.0 * g / (g - 1.0));
    return s;
  }

  // right of the contact
  if (right_is_shock) {
    if (xi > right_head) return R;
    return {rho_star_right, v_star, p_star};
  }
  if (xi > right_head) return R;
  if (xi < right_tail) return {rho_star_right, v_star, p_star};
  double factor = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * aR) * (R.v - xi);
  PrimitiveState s;
  s.rho = R.rho * std::pow(factor, 2.0 / (g - 1.0));
  s.v = 2.0 / (g + 1.0) * (-aR + 0.5 * (g - 1.0) * R.v + xi);
  s.P = R.P * std::pow(factor, 2.0 * g / (g - 1.0));
  return s;
}

PrimitiveState sod_exact(double x, double t, const RiemannProblem& problem) {
  if (t <= 0.0) return x < problem.x0 ? problem.left : problem.right;
  RiemannSolution sol = solve_riemann(problem);
  return sol.sample((x - problem.x0) / t);
}

// ---- slope-limited reference run --------------------------------------------

double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

void apply_minmod_limiter(Field& field, const Mesh& mesh,
                          const ReferenceElement& elem) {
  if (elem.degree != 1) {
    throw std::invalid_argument("apply_minmod_limiter: needs degree 1");
  }
  const int I = field.n_elements();
  const int nv = field.n_vars();
  // phi_0(1) and phi_1(1): element mean = c0 * u_hat_0, right-end deviation
  // sigma = c1 * u_hat_1 (valid for the Legendre basis in either
  // normalization, P_0(1) = P_1(1) = 1).
  const double c0 = elem.restriction(1, 0);
  const double c1 = elem.restriction(1, 1);

  Eigen::MatrixXd means(nv, I);
  for (int i = 0; i < I; ++i) {
    for (int v = 0; v < nv; ++v) means(v, i) = c0 * field.coeffs(i, v)[0];
  }
  const bool periodic = (mesh.boundary == BoundaryKind::periodic);
  for (int i = 0; i < I; ++i) {
    for (int v = 0; v < nv; ++v) {
      double mean = means(v, i);
      double fwd, bwd;
      if (i + 1 < I) fwd = means(v, i + 1) - mean;
      else if (periodic) fwd = means(v, 0) - mean;
      else fwd = mesh.ghost_right[v] - mean;
      if (i > 0) bwd = mean - means(v, i - 1);
      else if (periodic) bwd = mean - means(v, I - 1);
      else bwd = mean - mesh.ghost_left[v];
      double sigma = c1 * field.coeffs(i, v)[1];
      field.coeffs(i, v)[1] = minmod(sigma, fwd, bwd) / c1;
    }
  }
}

Eigen::VectorXd Dg1Reference::value(double x) const {
  int i = static_cast<int>(std::floor((x - mesh.x_left) / mesh.h()));
  i = std::max(0, std::min(mesh.n_elements - 1, i));
  double r = 2.0 * (x - mesh.element_left(i)) / mesh.h() - 1.0;
  r = std::max(-1.0, std::min(1.0, r));
  return point_value(field, i, r, elem);
}

Dg1Reference limited_reference_run(
    const ConservationLaw& law,
    const std::function<Eigen::VectorXd(double)>& initial_condition,
    double x_left, double x_right, int n_elements, BoundaryKind boundary,
    double final_time, double cfl) {
  Dg1Reference ref{make_mesh(x_left, x_right, n_elements, boundary),
                   build_reference_element(1), Field()};
  if (boundary == BoundaryKind::dirichlet_outflow) {
    ref.mesh.ghost_left = initial_condition(x_left);
    ref.mesh.ghost_right = initial_condition(x_right);
  }
  const int nv = law.n_vars();
  ref.field = project_initial_condition(initial_condition, ref.mesh, ref.elem, nv);
  apply_minmod_limiter(ref.field, ref.mesh, ref.elem);

  ViscosityField no_visc = build_viscosity_field(
      Eigen::VectorXd::Zero(n_elements),
      make_distribution(ViscosityKind::piecewise_constant), ref.mesh, ref.elem);
  StepControl control;
  control.cfl = cfl;

  auto rhs = [&](const Field& u) {
    return hyperbolic_rhs(u, law, FluxKind::local_lax_friedrichs, ref.mesh,
                          ref.elem);
  };
  // Three SSP stages with limiting after each one; the limiter must see
  // every intermediate state, so the plain stepper is unrolled here.
  double t = 0.0;
  while (t < final_time - 1e-14) {
    double dt = compute_dt(ref.field, law, no_visc, ref.mesh, ref.elem, control);
    dt = std::min(dt, final_time - t);
    Field& u = ref.field;
    Field u1 = u + dt * rhs(u);
    if (u1.has_nan()) throw BlowUpError("reference run stage 1", 1);
    apply_minmod_limiter(u1, ref.mesh, ref.elem);
    Field u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1));
    if (u2.has_nan()) throw BlowUpError("reference run stage 2", 2);
    apply_minmod_limiter(u2, ref.mesh, ref.elem);
    Field un = (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2));
    if (un.has_nan()) throw BlowUpError("reference run stage 3", 3);
    apply_minmod_limiter(un, ref.mesh, ref.elem);
    ref.field = un;
    t += dt;
  }
  return ref;
}

// ---- error norms ------------------------------------------------------------

Eigen::VectorXd snapshot_points(const ReferenceElement& elem) {
  const int n = 4 * elem.n_coeffs();
  Eigen::VectorXd pts(n);
  const double dr = 2.0 / n;
  for (int j = 0; j < n; ++j) pts[j] = -1.0 + (j + 0.5) * dr;
  return pts;
}

ErrorNorms error_norms(const Field& field,
                       const std::function<Eigen::VectorXd(double)>& reference,
                       const ReferenceElement& elem, const Mesh& mesh) {
  const int nv = field.n_vars();
  Eigen::VectorXd pts = snapshot_points(elem);
  const double dx = mesh.h() / pts.size();
  ErrorNorms norms;
  norms.l1 = Eigen::VectorXd::Zero(nv);
  norms.l2 = Eigen::VectorXd::Zero(nv);
  norms.linf = Eigen::VectorXd::Zero(nv);
  for (int i = 0; i < field.n_elements(); ++i) {
    for (int j = 0; j < pts.size(); ++j) {
      double x = mesh.to_physical(i, pts[j]);
      Eigen::VectorXd diff =
          point_value(field, i, pts[j], elem) - reference(x);
      for (int v = 0; v < nv; ++v) {
        double d = std::abs(diff[v]);
        norms.l1[v] += dx * d;
        norms.l2[v] += dx * d * d;
        norms.linf[v] = std::max(norms.linf[v], d);
      }
    }
  }
  norms.l2 = norms.l2.cwiseSqrt();
  return norms;
}

double windowed_l1_error(const Field& field,
                         const std::function<Eigen::VectorXd(double)>& reference,
                         const ReferenceElement& elem, const Mesh& mesh,
                         double window_min, double window_max, int var) {
  Eigen::VectorXd pts = snapshot_points(elem);
  const double dx = mesh.h() / pts.size();
  double total = 0.0;
  for (int i = 0; i < field.n_elements(); ++i) {
    for (int j = 0; j < pts.size(); ++j) {
      double x = mesh.to_physical(i, pts[j]);
      if (x < window_min || x > window_max) continue;
      double d = point_value(field, i, pts[j], elem)[var] - reference(x)[var];
      total += dx * std::abs(d);
    }
  }
  return total;
}

}  // namespace dglab
