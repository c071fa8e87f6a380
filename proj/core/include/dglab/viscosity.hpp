#ifndef DGLAB_VISCOSITY_HPP
#define DGLAB_VISCOSITY_HPP

#include <Eigen/Dense>
#include <string>

#include "dglab/basis.hpp"
#include "dglab/field.hpp"
#include "dglab/mesh.hpp"

namespace dglab {

// Viscosity layer: the shape nu(x) on the reference element, and the assembly
// of the per-element field eps(x) = eps_i * nu(x) from sensor strengths.

enum class ViscosityKind {
  piecewise_constant,
  c0_linear,
  legendre,
  gegenbauer,
  super_gaussian,
  gevrey,
};

ViscosityKind parse_viscosity_kind(const std::string& name);
std::string viscosity_kind_name(ViscosityKind kind);

struct ViscosityDistribution {
  ViscosityKind kind = ViscosityKind::super_gaussian;
  double lambda = 100.0;        // shape parameter (gegenbauer / SG / gevrey)
  double eps_machine = 1e-16;   // machine-precision constant of the SG alpha

  double alpha() const;  // -ln(eps_machine)
};

/// Distribution with the per-kind default shape parameter
/// (gegenbauer 0.1, super_gaussian 100, gevrey 100).
ViscosityDistribution make_distribution(ViscosityKind kind);
ViscosityDistribution make_distribution(ViscosityKind kind, double lambda);

/// nu(x) for x in reference coordinates. Throws std::domain_error outside
/// [-1,1]. c0_linear has no pointwise shape (it is assembled from vertex
/// values) and is rejected here with std::invalid_argument.
double distribution_value(const ViscosityDistribution& dist, double x);

/// Continuous viscosity obtained from per-element strengths by the
/// vertex-max / linear-interpolation smoothing:
///  1. each vertex takes the maximum strength of its adjacent elements
///     (wrapping around for periodic meshes; boundary vertices of
///     non-periodic meshes see a single element);
///  2. the vertex maxima are handed back to both adjoining elements;
///  3. each element carries the P1 interpolant through its two vertex values.
struct SmoothedViscosity {
  Eigen::VectorXd vertex_values;  // n_elements + 1
  double left_value(int element) const { return vertex_values[element]; }
  double right_value(int element) const { return vertex_values[element + 1]; }
  /// Linear interpolant on element i at reference coordinate r.
  double value(int element, double r) const {
    return 0.5 * (1.0 - r) * left_value(element) +
           0.5 * (1.0 + r) * right_value(element);
  }
};

SmoothedViscosity klockner_smooth(const Eigen::VectorXd& strengths,
                                  const Mesh& mesh);

/// Per-element sampled eps(x) >= 0 plus the descriptor that produced it.
struct ViscosityField {
  ViscosityDistribution distribution;
  Eigen::VectorXd strengths;      // eps_i per element
  Eigen::MatrixXd nodal_samples;  // (p+1) x n_elements, eps at GLL nodes
  Eigen::VectorXd vertex_values;  // c0_linear only, empty otherwise

  /// eps traces at the element ends (sample at node 0 / node p).
  double left_sample(int element) const { return nodal_samples(0, element); }
  double right_sample(int element) const {
    return nodal_samples(nodal_samples.rows() - 1, element);
  }
  double max_sample() const {
    return nodal_samples.size() == 0 ? 0.0 : nodal_samples.maxCoeff();
  }
};

ViscosityField build_viscosity_field(const Eigen::VectorXd& strengths,
                                     const ViscosityDistribution& dist,
                                     const Mesh& mesh,
                                     const ReferenceElement& elem);

/// The boundary defect sum_i [eps du/dx] over element boundaries (interior
/// traces, outward orientation): the rate at which a discontinuous viscosity
/// breaks conservation of int u dx. Exactly 0 for continuous compactly
/// supported eps; generally nonzero for piecewise-constant eps.
double conservation_violation_functional(const Field& field,
                                         const ViscosityField& visc,
                                         const Mesh& mesh,
                                         const ReferenceElement& elem);

}  // namespace dglab

#endif
