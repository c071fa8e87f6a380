#include "dglab/field.hpp"

namespace dglab {

Eigen::VectorXd nodal_values(const Field& f, int element, int var,
                             const ReferenceElement& elem) {
  return elem.vandermonde * f.coeffs(element, var);
}

Eigen::VectorXd point_value(const Field& f, int element, double r,
                            const ReferenceElement& elem) {
  Eigen::VectorXd raw = legendre_values(elem.degree, r);
  Eigen::VectorXd phi(elem.n_coeffs());
  for (int k = 0; k <= elem.degree; ++k) {
    double c = (elem.normalization == BasisNormalization::orthonormal)
                   ? std::sqrt((2.0 * k + 1.0) / 2.0)
                   : 1.0;
    phi[k] = c * raw[k];
  }
  return (f.element_block(element).transpose() * phi);
}

}  // namespace dglab
