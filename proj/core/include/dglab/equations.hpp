#ifndef DGLAB_EQUATIONS_HPP
#define DGLAB_EQUATIONS_HPP

#include <Eigen/Dense>
#include <memory>
#include <string>

namespace dglab {

// Conservation laws u_t + f(u)_x = 0 in 1D. States are passed as fixed-size
// vectors of the conserved variables; scalar laws use size-1 vectors so the
// semidiscretization can stay agnostic of the system dimension.

enum class FluxKind { upwind, local_lax_friedrichs };

FluxKind parse_flux_kind(const std::string& name);
std::string flux_kind_name(FluxKind kind);

struct EntropyPair {
  double entropy;  // U(u)
  double flux;     // F(u), with F' = U' f'
};

class ConservationLaw {
 public:
  virtual ~ConservationLaw() = default;

  virtual int n_vars() const = 0;
  virtual std::string name() const = 0;

  virtual Eigen::VectorXd flux(const Eigen::VectorXd& state) const = 0;

  /// Largest characteristic speed |lambda| at the given state.
  virtual double max_wave_speed(const Eigen::VectorXd& state) const = 0;

  virtual EntropyPair entropy_pair(const Eigen::VectorXd& state) const = 0;

  /// dU/du, the entropy variables.
  virtual Eigen::VectorXd entropy_variables(const Eigen::VectorXd& state) const = 0;

  /// Throws InadmissibleStateError if the state is outside the admissible
  /// set (no-op for laws whose admissible set is all of R^n).
  virtual void check_admissible(const Eigen::VectorXd& state) const;

  /// Numerical interface flux from interior (left) and exterior (right)
  /// traces. Upwinding is only defined for scalar laws with a fixed sign of
  /// the characteristic; LLF works for everything.
  Eigen::VectorXd numerical_flux(FluxKind kind, const Eigen::VectorXd& left,
                                 const Eigen::VectorXd& right) const;
};

/// u_t + a u_x = 0. Entropy pair: U = u^2/2, F = a u^2/2.
class LinearAdvection : public ConservationLaw {
 public:
  explicit LinearAdvection(double speed = 1.0) : speed_(speed) {}

  int n_vars() const override { return 1; }
  std::string name() const override { return "linear_advection"; }
  double speed() const { return speed_; }

  Eigen::VectorXd flux(const Eigen::VectorXd& state) const override;
  double max_wave_speed(const Eigen::VectorXd& state) const override;
  EntropyPair entropy_pair(const Eigen::VectorXd& state) const override;
  Eigen::VectorXd entropy_variables(const Eigen::VectorXd& state) const override;

 private:
  double speed_;
};

/// Compressible Euler equations in conserved variables (rho, m, E) with an
/// ideal gas law P = (gamma-1)(E - m^2/(2 rho)).
/// Entropy pair: U = -rho s, F = -rho s v, s = ln(P) - gamma ln(rho).
class Euler : public ConservationLaw {
 public:
  explicit Euler(double gamma = 1.4) : gamma_(gamma) {}

  int n_vars() const override { return 3; }
  std::string name() const override { return "euler"; }
  double gamma() const { return gamma_; }

  double pressure(const Eigen::VectorXd& state) const;
  double velocity(const Eigen::VectorXd& state) const;
  double sound_speed(const Eigen::VectorXd& state) const;

  /// (rho, v, P) -> (rho, m, E)
  Eigen::VectorXd from_primitive(double rho, double v, double P) const;

  Eigen::VectorXd flux(const Eigen::VectorXd& state) const override;
  double max_wave_speed(const Eigen::VectorXd& state) const override;
  EntropyPair entropy_pair(const Eigen::VectorXd& state) const override;
  Eigen::VectorXd entropy_variables(const Eigen::VectorXd& state) const override;
  void check_admissible(const Eigen::VectorXd& state) const override;

 private:
  double gamma_;
};

std::unique_ptr<ConservationLaw> make_law(const std::string& name);

}  // namespace dglab

#endif
