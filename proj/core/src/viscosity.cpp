#include "dglab/viscosity.hpp"

#include <cmath>
#include <stdexcept>

#include "dglab/errors.hpp"

namespace dglab {

ViscosityKind parse_viscosity_kind(const std::string& name) {
  if (name == "piecewise_constant") return ViscosityKind::piecewise_constant;
  if (name == "c0_linear") return ViscosityKind::c0_linear;
  if (name == "legendre") return ViscosityKind::legendre;
  if (name == "gegenbauer") return ViscosityKind::gegenbauer;
  if (name == "super_gaussian") return ViscosityKind::super_gaussian;
  if (name == "gevrey") return ViscosityKind::gevrey;
  throw ConfigError("unknown viscosity kind '" + name + "'");
}

std::string viscosity_kind_name(ViscosityKind kind) {
  switch (kind) {
    case ViscosityKind::piecewise_constant: return "piecewise_constant";
    case ViscosityKind::c0_linear: return "c0_linear";
    case ViscosityKind::legendre: return "legendre";
    case ViscosityKind::gegenbauer: return "gegenbauer";
    case ViscosityKind::super_gaussian: return "super_gaussian";
    case ViscosityKind::gevrey: return "gevrey";
  }
  throw std::logic_error("unreachable viscosity kind");
}

double ViscosityDistribution::alpha() const { return -std::log(eps_machine); }

ViscosityDistribution make_distribution(ViscosityKind kind) {
  ViscosityDistribution dist;
  dist.kind = kind;
  switch (kind) {
    case ViscosityKind::gegenbauer:
      dist.lambda = 0.1;
      break;
    case ViscosityKind::super_gaussian:
    case ViscosityKind::gevrey:
      dist.lambda = 100.0;
      break;
    default:
      dist.lambda = 1.0;  // unused by the remaining kinds
      break;
  }
  return dist;
}

ViscosityDistribution make_distribution(ViscosityKind kind, double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("viscosity shape parameter must be positive");
  }
  ViscosityDistribution dist = make_distribution(kind);
  dist.lambda = lambda;
  return dist;
}

double distribution_value(const ViscosityDistribution& dist, double x) {
  if (std::abs(x) > 1.0 + 1e-14) {
    throw std::domain_error("distribution_value: x outside [-1, 1]");
  }
  x = std::clamp(x, -1.0, 1.0);
  switch (dist.kind) {
    case ViscosityKind::piecewise_constant:
      return 1.0;
    case ViscosityKind::legendre:
      return 1.0 - x * x;
    case ViscosityKind::gegenbauer:
      return std::pow(1.0 - x * x, dist.lambda);
    case ViscosityKind::super_gaussian:
      return std::exp(-dist.alpha() * std::pow(x * x, dist.lambda));
    case ViscosityKind::gevrey: {
      // The formula's limit at |x| -> 1 is 0; evaluating the exponent there
      // would be 1/0, so values that close to the endpoints short-circuit.
      if (std::abs(x) >= 1.0 - 1e-12) return 0.0;
      return std::exp(x * x / (dist.lambda * (x * x - 1.0)));
    }
    case ViscosityKind::c0_linear:
      throw std::invalid_argument(
          "c0_linear has no pointwise shape; it is assembled from vertex "
          "values by build_viscosity_field");
  }
  throw std::logic_error("unreachable viscosity kind");
}

SmoothedViscosity klockner_smooth(const Eigen::VectorXd& strengths,
                                  const Mesh& mesh) {
  if (strengths.size() != mesh.n_elements) {
    throw std::invalid_argument("klockner_smooth: one strength per element");
  }
  if (strengths.minCoeff() < 0.0) {
    throw std::invalid_argument("klockner_smooth: negative strength");
  }
  const int n = mesh.n_elements;
  SmoothedViscosity out;
  out.vertex_values.resize(n + 1);
  // Interior vertex j sits between elements j-1 and j.
  for (int j = 1; j < n; ++j) {
    out.vertex_values[j] = std::max(strengths[j - 1], strengths[j]);
  }
  if (mesh.boundary == BoundaryKind::periodic) {
    double wrap = std::max(strengths[n - 1], strengths[0]);
    out.vertex_values[0] = wrap;
    out.vertex_values[n] = wrap;
  } else {
    out.vertex_values[0] = strengths[0];
    out.vertex_values[n] = strengths[n - 1];
  }
  return out;
}

ViscosityField build_viscosity_field(const Eigen::VectorXd& strengths,
                                     const ViscosityDistribution& dist,
                                     const Mesh& mesh,
                                     const ReferenceElement& elem) {
  if (strengths.size() != mesh.n_elements) {
    throw std::invalid_argument("build_viscosity_field: one strength per element");
  }
  if (strengths.size() > 0 && strengths.minCoeff() < 0.0) {
    throw std::invalid_argument("build_viscosity_field: negative strength");
  }
  ViscosityField field;
  field.distribution = dist;
  field.strengths = strengths;
  const int np = elem.n_coeffs();
  field.nodal_samples.resize(np, mesh.n_elements);

  if (dist.kind == ViscosityKind::c0_linear) {
    SmoothedViscosity smooth = klockner_smooth(strengths, mesh);
    field.vertex_values = smooth.vertex_values;
    for (int i = 0; i < mesh.n_elements; ++i) {
      for (int j = 0; j < np; ++j) {
        field.nodal_samples(j, i) = smooth.value(i, elem.nodes[j]);
      }
    }
    return field;
  }

  for (int i = 0; i < mesh.n_elements; ++i) {
    for (int j = 0; j < np; ++j) {
      field.nodal_samples(j, i) =
          strengths[i] * distribution_value(dist, elem.nodes[j]);
    }
  }
  return field;
}

double conservation_violation_functional(const Field& field,
                                         const ViscosityField& visc,
                                         const Mesh& mesh,
                                         const ReferenceElement& elem) {
  // d/dt int_Omega u dx picks up, from the viscous term of each element,
  // the boundary contribution  [eps du/dx]_{x_i}^{x_{i+1}}  evaluated with
  // interior traces. Summing over elements with the outward signs gives the
  // total conservation defect; a continuous compactly supported eps makes
  // every term vanish.
  const double jac = 2.0 / mesh.h();  // d/dx = (2/h) d/dr
  double total = 0.0;
  for (int i = 0; i < field.n_elements(); ++i) {
    for (int v = 0; v < field.n_vars(); ++v) {
      Eigen::Vector2d du = elem.deriv_restriction * field.coeffs(i, v);
      double left = visc.left_sample(i) * du[0] * jac;
      double right = visc.right_sample(i) * du[1] * jac;
      total += right - left;
    }
  }
  return total;
}

}  // namespace dglab
