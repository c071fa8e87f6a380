#include "dglab/sensor.hpp"

#include <cmath>
#include <stdexcept>

#include "dglab/errors.hpp"

namespace dglab {

SensorMode parse_sensor_mode(const std::string& name) {
  if (name == "classic") return SensorMode::classic;
  if (name == "modified") return SensorMode::modified;
  throw ConfigError("unknown sensor mode '" + name + "'");
}

std::string sensor_mode_name(SensorMode mode) {
  return mode == SensorMode::classic ? "classic" : "modified";
}

double smoothness_indicator(const Eigen::VectorXd& modal_coeffs,
                            double energy_floor) {
  const auto n = modal_coeffs.size();
  if (n < 2) {
    throw std::invalid_argument("smoothness_indicator: need degree >= 1");
  }
  double total = modal_coeffs.squaredNorm();
  if (total < energy_floor) return 0.0;
  double top = modal_coeffs[n - 1] * modal_coeffs[n - 1];
  return top / total;
}

double strength_from_score(double s, double s_ref, double kappa,
                           double eps_max) {
  if (!(kappa > 0.0)) {
    throw std::invalid_argument("strength_from_score: kappa must be positive");
  }
  if (s < s_ref - kappa) return 0.0;
  if (s > s_ref + kappa) return eps_max;
  return 0.5 * eps_max * (1.0 + std::sin(M_PI * (s - s_ref) / (2.0 * kappa)));
}

double modified_score(double S, int p, double c, double floor) {
  double F = std::min(c * std::pow(double(p), 4) * S, 1.0);
  if (F <= 0.0) return floor;
  return std::max(std::log10(F), floor);
}

double classic_score(double S, double floor) {
  if (S <= 0.0) return floor;
  return std::max(std::log10(S), floor);
}

double max_strength(const ConservationLaw& law, const Field& field, double h,
                    const ReferenceElement& elem) {
  if (h <= 0.0) return 0.0;
  double lam = 0.0;
  Eigen::VectorXd state(field.n_vars());
  for (int i = 0; i < field.n_elements(); ++i) {
    // Nodal states of the whole element in one Vandermonde multiply.
    Eigen::MatrixXd nodal = elem.vandermonde * field.element_block(i);
    for (int j = 0; j < nodal.rows(); ++j) {
      state = nodal.row(j).transpose();
      law.check_admissible(state);
      lam = std::max(lam, law.max_wave_speed(state));
    }
  }
  return 0.5 * lam * h / elem.degree;
}

SensorOutput sense(const Field& field, const ConservationLaw& law,
                   const SensorConfig& config, const Mesh& mesh,
                   const ReferenceElement& elem) {
  const int I = field.n_elements();
  SensorOutput out;
  out.indicator.resize(I);
  out.score.resize(I);
  out.strength.resize(I);
  out.eps_max =
      config.eps_max_scale * max_strength(law, field, mesh.h(), elem);

  const int p = elem.degree;
  const double s_ref = (config.mode == SensorMode::modified)
                           ? -2.0
                           : -4.0 * std::log10(double(p));
  for (int i = 0; i < I; ++i) {
    double S = smoothness_indicator(field.coeffs(i, 0), config.energy_floor);
    double s = (config.mode == SensorMode::modified)
                   ? modified_score(S, p, config.c, config.score_floor)
                   : classic_score(S, config.score_floor);
    out.indicator[i] = S;
    out.score[i] = s;
    out.strength[i] = strength_from_score(s, s_ref, config.kappa, out.eps_max);
  }
  return out;
}

}  // namespace dglab
