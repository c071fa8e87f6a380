#ifndef DGLAB_TIMEINT_HPP
#define DGLAB_TIMEINT_HPP

#include <array>
#include <cmath>
#include <string>

#include "dglab/basis.hpp"
#include "dglab/equations.hpp"
#include "dglab/errors.hpp"
#include "dglab/field.hpp"
#include "dglab/mesh.hpp"
#include "dglab/viscosity.hpp"

namespace dglab {

// Strong-stability-preserving Runge-Kutta steppers, step-size control, and
// the modal-filter substep of the operator-splitting path.

enum class Integrator { ssprk33, ssprk54 };

Integrator parse_integrator(const std::string& name);
std::string integrator_name(Integrator integrator);

struct StepControl {
  double cfl = 0.38;          // advective constant C
  double cfl_viscous = 0.25;  // parabolic safety constant
  double fixed_dt = 0.0;      // > 0 overrides the bounds entirely
};

namespace detail {
inline bool state_has_nan(double x) { return !std::isfinite(x); }
inline bool state_has_nan(const Field& f) { return f.has_nan(); }
}  // namespace detail

// Convex-combination tableaus, exposed so tests can check that every stage
// is a convex combination of previous states plus a forward-Euler piece.
// Row layout: {weight of u^n, weight of previous stage, Euler coefficient}.
inline constexpr std::array<std::array<double, 3>, 3> kSsprk33Tableau = {{
    {1.0, 0.0, 1.0},
    {0.75, 0.25, 0.25},
    {1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0},
}};

// Low-storage five-stage coefficients: stage i is
//   u_i = a_i u_{prev(i)} + (1 - a_i) u_{ref(i)} + b_i dt L(u_{prev(i)})
// in the usual published form; spelled out explicitly in ssprk54_step. The
// raw numbers are kept here for the coefficient-sum checks.
inline constexpr std::array<double, 9> kSsprk54Coeffs = {
    0.391752226571890,  // b1
    0.444370493651235, 0.555629506348765, 0.368410593050371,  // a20 a21 b2
    0.620101851488403, 0.379898148511597, 0.251891774271694,  // a30 a32 b3
    0.178079954393132, 0.821920045606868,                     // a40 a43
};
inline constexpr std::array<double, 5> kSsprk54FinalStage = {
    0.517231671970585,  // weight of u2
    0.096059710526147,  // weight of u3
    0.063692468666290,  // dt L(u3) coefficient
    0.386708617503269,  // weight of u4
    0.226007483236906,  // dt L(u4) coefficient
};
inline constexpr double kSsprk54Beta4 = 0.544974750228521;  // b4

/// Three-stage third-order SSP scheme:
///   u1 = u + dt L(u)
///   u2 = 3/4 u + 1/4 (u1 + dt L(u1))
///   u+ = 1/3 u + 2/3 (u2 + dt L(u2))
/// Throws BlowUpError (with the stage index) when a stage goes non-finite.
template <typename State, typename Rhs>
State ssprk33_step(const State& u, double dt, Rhs&& rhs) {
  State u1 = u + dt * rhs(u);
  if (detail::state_has_nan(u1)) throw BlowUpError("ssprk33 stage 1", 1);
  State u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1));
  if (detail::state_has_nan(u2)) throw BlowUpError("ssprk33 stage 2", 2);
  State un = (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2));
  if (detail::state_has_nan(un)) throw BlowUpError("ssprk33 stage 3", 3);
  return un;
}

/// Five-stage fourth-order SSP scheme (optimal tableau).
template <typename State, typename Rhs>
State ssprk54_step(const State& u, double dt, Rhs&& rhs) {
  const auto& c = kSsprk54Coeffs;
  const auto& f = kSsprk54FinalStage;
  State u1 = u + c[0] * dt * rhs(u);
  if (detail::state_has_nan(u1)) throw BlowUpError("ssprk54 stage 1", 1);
  State u2 = c[1] * u + c[2] * u1 + c[3] * dt * rhs(u1);
  if (detail::state_has_nan(u2)) throw BlowUpError("ssprk54 stage 2", 2);
  State u3 = c[4] * u + c[5] * u2 + c[6] * dt * rhs(u2);
  if (detail::state_has_nan(u3)) throw BlowUpError("ssprk54 stage 3", 3);
  State l3 = rhs(u3);
  State u4 = c[7] * u + c[8] * u3 + kSsprk54Beta4 * dt * l3;
  if (detail::state_has_nan(u4)) throw BlowUpError("ssprk54 stage 4", 4);
  State un = f[0] * u2 + f[1] * u3 + f[2] * dt * l3 + f[3] * u4 +
             f[4] * dt * rhs(u4);
  if (detail::state_has_nan(un)) throw BlowUpError("ssprk54 stage 5", 5);
  return un;
}

/// min(advective, parabolic) step bound:
///   advective: C h / ((2p+1) lambda_max),
///   parabolic: C_visc h^2 / (p^4 max(eps)).
/// A fixed_dt override wins when positive. Throws std::runtime_error when
/// the result is not positive.
double compute_dt(const Field& field, const ConservationLaw& law,
                  const ViscosityField& visc, const Mesh& mesh,
                  const ReferenceElement& elem, const StepControl& control);

/// Exact solver of the per-element Legendre-viscosity substep: modal
/// coefficient k of element i is multiplied by
///   exp(-eps_i k(k+1) dt (2/h)^2).
Field modal_filter_step(const Field& field, const Eigen::VectorXd& strengths,
                        double dt, const Mesh& mesh,
                        const ReferenceElement& elem);

/// First-order Lie splitting: one SSP step on the hyperbolic part alone,
/// then the exact modal filter for the Legendre-viscosity substep.
/// Throws std::invalid_argument for any other viscosity kind (the filter is
/// only the exact substep solver for the Legendre distribution).
Field operator_split_advance(const Field& field, const ConservationLaw& law,
                             FluxKind flux_kind, const ViscosityField& visc,
                             double dt, const Mesh& mesh,
                             const ReferenceElement& elem,
                             Integrator integrator, bool parallel = false);

}  // namespace dglab

#endif
