#ifndef DGLAB_SENSOR_HPP
#define DGLAB_SENSOR_HPP

#include <Eigen/Dense>
#include <string>

#include "dglab/basis.hpp"
#include "dglab/equations.hpp"
#include "dglab/field.hpp"
#include "dglab/mesh.hpp"

namespace dglab {

// Modal smoothness sensor: per-element top-mode energy fraction, mapped
// through a sine ramp to a viscosity strength in [0, eps_max].

enum class SensorMode { classic, modified };

SensorMode parse_sensor_mode(const std::string& name);
std::string sensor_mode_name(SensorMode mode);

struct SensorConfig {
  SensorMode mode = SensorMode::modified;
  double kappa = 1.0;          // ramp half-width
  double c = 1.0;              // sensitivity constant (modified mode)
  double eps_max_scale = 1.0;  // multiplies the h/p strength bound
  double score_floor = -12.0;  // log-score clamp, keeps -inf out of the ramp
  double energy_floor = 1e-28; // below this total modal energy, S := 0
};

struct SensorOutput {
  Eigen::VectorXd indicator;  // S per element, in [0,1]
  Eigen::VectorXd score;      // s per element
  Eigen::VectorXd strength;   // eps per element, in [0, eps_max]
  double eps_max = 0.0;
};

/// S = u_p^2 / sum_k u_k^2 for orthonormal modal coefficients; 0 when the
/// total energy is below the floor.
double smoothness_indicator(const Eigen::VectorXd& modal_coeffs,
                            double energy_floor = 1e-28);

/// Sine ramp: 0 for s < s_ref - kappa, eps_max for s > s_ref + kappa,
/// eps_max/2 (1 + sin(pi (s - s_ref) / (2 kappa))) between.
double strength_from_score(double s, double s_ref, double kappa,
                           double eps_max);

/// Modified log score s = log10(min(c p^4 S, 1)), clamped below at `floor`.
/// Pairs with the fixed reference value s_ref = -2.
double modified_score(double S, int p, double c, double floor = -12.0);

/// Classic log score s = log10(S) with the same floor; pairs with
/// s_ref = -4 log10(p).
double classic_score(double S, double floor = -12.0);

/// eps_max = 1/2 max|f'(u)| h / p, with the max taken over the nodal values
/// of the whole field; systems use the max characteristic speed.
double max_strength(const ConservationLaw& law, const Field& field, double h,
                    const ReferenceElement& elem);

/// Full sensor sweep. The sensing variable is the first conserved variable
/// (the scalar itself, or density for Euler); the resulting strength applies
/// to every conserved variable downstream.
SensorOutput sense(const Field& field, const ConservationLaw& law,
                   const SensorConfig& config, const Mesh& mesh,
                   const ReferenceElement& elem);

}  // namespace dglab

#endif
