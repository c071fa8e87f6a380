#include "dglab/timeint.hpp"

#include <limits>
#include <stdexcept>

#include "dglab/semidisc.hpp"

namespace dglab {

Integrator parse_integrator(const std::string& name) {
  if (name == "ssprk33") return Integrator::ssprk33;
  if (name == "ssprk54") return Integrator::ssprk54;
  throw ConfigError("unknown integrator '" + name + "'");
}

std::string integrator_name(Integrator integrator) {
  return integrator == Integrator::ssprk33 ? "ssprk33" : "ssprk54";
}

double compute_dt(const Field& field, const ConservationLaw& law,
                  const ViscosityField& visc, const Mesh& mesh,
                  const ReferenceElement& elem, const StepControl& control) {
  if (control.fixed_dt > 0.0) return control.fixed_dt;

  double lam = 0.0;
  Eigen::VectorXd state(field.n_vars());
  for (int i = 0; i < field.n_elements(); ++i) {
    Eigen::MatrixXd nodal = elem.vandermonde * field.element_block(i);
    for (int j = 0; j < nodal.rows(); ++j) {
      state = nodal.row(j).transpose();
      law.check_admissible(state);
      lam = std::max(lam, law.max_wave_speed(state));
    }
  }
  const double h = mesh.h();
  const int p = elem.degree;
  double dt = std::numeric_limits<double>::infinity();
  if (lam > 0.0) dt = control.cfl * h / ((2.0 * p + 1.0) * lam);
  double eps_max = visc.max_sample();
  if (eps_max > 0.0) {
    // The grad-of-grad operator acting on degree-p polynomials has spectral
    // radius ~ eps * p^4 / h^2 (the relevant grid scale inside an element is
    // h/p^2, not h), so the parabolic bound must shrink accordingly or
    // high-degree runs go unstable at exactly the advective CFL.
    const double p2 = static_cast<double>(p) * p;
    dt = std::min(dt, control.cfl_viscous * h * h / (p2 * p2 * eps_max));
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::runtime_error("compute_dt: no finite positive step bound "
                             "(zero wave speed and zero viscosity?)");
  }
  return dt;
}

Field modal_filter_step(const Field& field, const Eigen::VectorXd& strengths,
                        double dt, const Mesh& mesh,
                        const ReferenceElement& elem) {
  if (strengths.size() != field.n_elements()) {
    throw std::invalid_argument("modal_filter_step: one strength per element");
  }
  const double jac2 = (2.0 / mesh.h()) * (2.0 / mesh.h());
  Field out = field;
  for (int i = 0; i < field.n_elements(); ++i) {
    for (int k = 0; k <= elem.degree; ++k) {
      double factor = std::exp(-strengths[i] * elem.eigenvalues[k] * dt * jac2);
      for (int v = 0; v < field.n_vars(); ++v) {
        out.coeffs(i, v)[k] *= factor;
      }
    }
  }
  return out;
}

Field operator_split_advance(const Field& field, const ConservationLaw& law,
                             FluxKind flux_kind, const ViscosityField& visc,
                             double dt, const Mesh& mesh,
                             const ReferenceElement& elem,
                             Integrator integrator, bool parallel) {
  if (visc.distribution.kind != ViscosityKind::legendre) {
    throw std::invalid_argument(
        "operator_split_advance: the modal filter is the exact substep "
        "solver only for the legendre viscosity; got kind '" +
        viscosity_kind_name(visc.distribution.kind) + "'");
  }
  auto rhs = [&](const Field& u) {
    return hyperbolic_rhs(u, law, flux_kind, mesh, elem, parallel);
  };
  Field hyp = (integrator == Integrator::ssprk33)
                  ? ssprk33_step(field, dt, rhs)
                  : ssprk54_step(field, dt, rhs);
  return modal_filter_step(hyp, visc.strengths, dt, mesh, elem);
}

}  // namespace dglab
