#include "dglab/equations.hpp"

#include <cmath>
#include <stdexcept>

#include "dglab/errors.hpp"

namespace dglab {

FluxKind parse_flux_kind(const std::string& name) {
  if (name == "upwind") return FluxKind::upwind;
  if (name == "local_lax_friedrichs" || name == "llf") {
    return FluxKind::local_lax_friedrichs;
  }
  throw ConfigError("unknown flux kind '" + name + "'");
}

std::string flux_kind_name(FluxKind kind) {
  return kind == FluxKind::upwind ? "upwind" : "local_lax_friedrichs";
}

void ConservationLaw::check_admissible(const Eigen::VectorXd&) const {}

Eigen::VectorXd ConservationLaw::numerical_flux(FluxKind kind,
                                                const Eigen::VectorXd& left,
                                                const Eigen::VectorXd& right) const {
  switch (kind) {
    case FluxKind::upwind: {
      // Pure upwinding only makes sense when the characteristic direction is
      // known a priori, i.e. for scalar advection.
      const auto* adv = dynamic_cast<const LinearAdvection*>(this);
      if (adv == nullptr) {
        throw std::invalid_argument(
            "upwind flux is only supported for linear advection; use "
            "local_lax_friedrichs for systems");
      }
      return adv->speed() >= 0.0 ? flux(left) : flux(right);
    }
    case FluxKind::local_lax_friedrichs: {
      double lam = std::max(max_wave_speed(left), max_wave_speed(right));
      return 0.5 * (flux(left) + flux(right)) - 0.5 * lam * (right - left);
    }
  }
  throw std::logic_error("unreachable flux kind");
}

// ---- linear advection ------------------------------------------------------

Eigen::VectorXd LinearAdvection::flux(const Eigen::VectorXd& state) const {
  return speed_ * state;
}

double LinearAdvection::max_wave_speed(const Eigen::VectorXd&) const {
  return std::abs(speed_);
}

EntropyPair LinearAdvection::entropy_pair(const Eigen::VectorXd& state) const {
  double u = state[0];
  return {0.5 * u * u, 0.5 * speed_ * u * u};
}

Eigen::VectorXd LinearAdvection::entropy_variables(
    const Eigen::VectorXd& state) const {
  return state;
}

// ---- Euler -----------------------------------------------------------------

double Euler::pressure(const Eigen::VectorXd& state) const {
  double rho = state[0], m = state[1], E = state[2];
  return (gamma_ - 1.0) * (E - 0.5 * m * m / rho);
}

double Euler::velocity(const Eigen::VectorXd& state) const {
  return state[1] / state[0];
}

double Euler::sound_speed(const Eigen::VectorXd& state) const {
  return std::sqrt(gamma_ * pressure(state) / state[0]);
}

Eigen::VectorXd Euler::from_primitive(double rho, double v, double P) const {
  Eigen::VectorXd u(3);
  u[0] = rho;
  u[1] = rho * v;
  u[2] = P / (gamma_ - 1.0) + 0.5 * rho * v * v;
  return u;
}

Eigen::VectorXd Euler::flux(const Eigen::VectorXd& state) const {
  double rho = state[0], m = state[1], E = state[2];
  double v = m / rho;
  double P = pressure(state);
  Eigen::VectorXd f(3);
  f[0] = m;
  f[1] = v * m + P;
  f[2] = v * (E + P);
  return f;
}

double Euler::max_wave_speed(const Eigen::VectorXd& state) const {
  return std::abs(velocity(state)) + sound_speed(state);
}

EntropyPair Euler::entropy_pair(const Eigen::VectorXd& state) const {
  double rho = state[0];
  double P = pressure(state);
  double s = std::log(P) - gamma_ * std::log(rho);
  double v = velocity(state);
  return {-rho * s, -rho * s * v};
}

Eigen::VectorXd Euler::entropy_variables(const Eigen::VectorXd& state) const {
  // dU/du for U = -rho s, s = ln(P) - gamma ln(rho):
  //   w = (gamma - s - (gamma-1) rho v^2/(2P),
  //        (gamma-1) rho v / P,
  //        -(gamma-1) rho / P)
  // (the common textbook form divides U by gamma-1; this entropy does not,
  // so the factor stays in the gradient).
  double rho = state[0], m = state[1];
  double v = m / rho;
  double P = pressure(state);
  double s = std::log(P) - gamma_ * std::log(rho);
  double gm1 = gamma_ - 1.0;
  Eigen::VectorXd w(3);
  w[0] = gamma_ - s - 0.5 * gm1 * rho * v * v / P;
  w[1] = gm1 * rho * v / P;
  w[2] = -gm1 * rho / P;
  return w;
}

void Euler::check_admissible(const Eigen::VectorXd& state) const {
  double rho = state[0];
  if (!(rho > 0.0)) {
    throw InadmissibleStateError("non-positive density rho = " +
                                 std::to_string(rho));
  }
  double P = pressure(state);
  if (!(P > 0.0)) {
    throw InadmissibleStateError("non-positive pressure P = " +
                                 std::to_string(P));
  }
}

std::unique_ptr<ConservationLaw> make_law(const std::string& name) {
  if (name == "linear_advection") return std::make_unique<LinearAdvection>();
  if (name == "euler") return std::make_unique<Euler>();
  throw ConfigError("unknown conservation law '" + name + "'");
}

}  // namespace dglab
