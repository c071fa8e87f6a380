#ifndef DGLAB_DIAGNOSTICS_HPP
#define DGLAB_DIAGNOSTICS_HPP

#include <Eigen/Dense>
#include <functional>

#include "dglab/basis.hpp"
#include "dglab/equations.hpp"
#include "dglab/field.hpp"
#include "dglab/mesh.hpp"

namespace dglab {

// Conserved totals, entropy tracking, exact/reference solutions, and error
// norms -- everything the experiments and the property tests measure.

/// Per-variable quadrature total sum_i (h/2) sum_j w_j u(x_j).
Eigen::VectorXd total_integral(const Field& field, const ReferenceElement& elem,
                               const Mesh& mesh);

/// Quadrature total of the entropy U(u); throws on inadmissible states.
double total_entropy(const Field& field, const ConservationLaw& law,
                     const ReferenceElement& elem, const Mesh& mesh);

/// Quadrature estimate of d/dt int U = sum <U'(u), du/dt> for a given
/// tendency field (both sampled nodally).
double entropy_rate_estimate(const Field& field, const Field& tendency,
                             const ConservationLaw& law,
                             const ReferenceElement& elem, const Mesh& mesh);

/// Exact solution of u_t + u_x = 0 with periodic wrap: the initial profile
/// shifted by speed * t.
double advection_exact(const std::function<double(double)>& initial_profile,
                       double t, double x, double x_left, double x_right,
                       double speed = 1.0);

// ---- exact Riemann solution for the 1D Euler equations --------------------

struct PrimitiveState {
  double rho = 0.0;
  double v = 0.0;
  double P = 0.0;
};

struct RiemannProblem {
  PrimitiveState left;
  PrimitiveState right;
  double gamma = 1.4;
  double x0 = 0.5;  // initial discontinuity position
};

/// Classical Sod data (1, 0, 1) / (0.125, 0, 0.1) with gamma = 1.4.
RiemannProblem sod_problem();

/// Star-region values and wave speeds of the exact solution. The left and
/// right waves are each a shock or a rarefaction depending on p_star vs the
/// adjacent pressure.
struct RiemannSolution {
  RiemannProblem problem;
  double p_star = 0.0;
  double v_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  bool left_is_shock = false;
  bool right_is_shock = false;
  double left_head = 0.0;   // fastest left-going signal
  double left_tail = 0.0;   // slowest (equals head for a shock)
  double right_head = 0.0;  // fastest right-going signal
  double right_tail = 0.0;

  double contact_speed() const { return v_star; }
  /// State at similarity coordinate xi = (x - x0)/t.
  PrimitiveState sample(double xi) const;
};

/// Newton iteration on the pressure function (tolerance 1e-12, at most 100
/// iterations). Throws InadmissibleStateError on vacuum-generating data and
/// std::runtime_error on non-convergence.
RiemannSolution solve_riemann(const RiemannProblem& problem);

/// Exact solution at (x, t). For t <= 0 returns the initial data.
PrimitiveState sod_exact(double x, double t, const RiemannProblem& problem);

// ---- slope-limited low-order reference run ---------------------------------

/// minmod: the common-sign argument of least magnitude, 0 on sign conflict.
double minmod(double a, double b, double c);

/// In-place slope limiting of a degree-1 field: each element's linear part is
/// replaced by the minmod of itself and the forward/backward mean
/// differences. Throws std::invalid_argument for degree != 1.
void apply_minmod_limiter(Field& field, const Mesh& mesh,
                          const ReferenceElement& elem);

/// A degree-1 DG solution with exact point evaluation, used as the
/// high-resolution reference of the oscillatory-flow comparisons.
struct Dg1Reference {
  Mesh mesh;
  ReferenceElement elem;
  Field field;

  Eigen::VectorXd value(double x) const;  // all variables at physical x
};

/// Runs degree-1 DG with local Lax-Friedrichs fluxes, three-stage SSP time
/// stepping, and minmod limiting after every stage up to final_time.
Dg1Reference limited_reference_run(
    const ConservationLaw& law,
    const std::function<Eigen::VectorXd(double)>& initial_condition,
    double x_left, double x_right, int n_elements, BoundaryKind boundary,
    double final_time, double cfl = 0.38);

// ---- error norms ------------------------------------------------------------

/// Reference coordinates of the fixed oversampled output grid:
/// 4(p+1) equispaced cell-centered points per element.
Eigen::VectorXd snapshot_points(const ReferenceElement& elem);

struct ErrorNorms {
  Eigen::VectorXd l1;    // per variable
  Eigen::VectorXd l2;
  Eigen::VectorXd linf;
};

/// Midpoint-rule norms of (field - reference) on the snapshot grid.
ErrorNorms error_norms(const Field& field,
                       const std::function<Eigen::VectorXd(double)>& reference,
                       const ReferenceElement& elem, const Mesh& mesh);

/// L1 norm of the difference restricted to [window_min, window_max], for one
/// variable; same grid and rule as error_norms.
double windowed_l1_error(const Field& field,
                         const std::function<Eigen::VectorXd(double)>& reference,
                         const ReferenceElement& elem, const Mesh& mesh,
                         double window_min, double window_max, int var);

}  // namespace dglab

#endif
