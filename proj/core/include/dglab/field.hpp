#ifndef DGLAB_FIELD_HPP
#define DGLAB_FIELD_HPP

#include <Eigen/Dense>

#include "dglab/basis.hpp"
#include "dglab/mesh.hpp"

namespace dglab {

/// Discrete solution: modal Legendre coefficients, stored as one
/// (p+1) x (n_elements * n_vars) matrix. Column (i * n_vars + v) holds the
/// coefficients of variable v on element i; this keeps per-element blocks
/// contiguous for the flux loops and lets Runge-Kutta stages be plain
/// matrix arithmetic.
class Field {
 public:
  Field() = default;
  Field(int n_coeffs, int n_elements, int n_vars)
      : n_elements_(n_elements),
        n_vars_(n_vars),
        data_(Eigen::MatrixXd::Zero(n_coeffs, n_elements * n_vars)) {}

  int n_coeffs() const { return static_cast<int>(data_.rows()); }
  int n_elements() const { return n_elements_; }
  int n_vars() const { return n_vars_; }

  Eigen::MatrixXd& data() { return data_; }
  const Eigen::MatrixXd& data() const { return data_; }

  /// Modal coefficient column of variable v on element i.
  Eigen::MatrixXd::ColXpr coeffs(int element, int var) {
    return data_.col(element * n_vars_ + var);
  }
  Eigen::MatrixXd::ConstColXpr coeffs(int element, int var) const {
    return data_.col(element * n_vars_ + var);
  }

  /// All variables of one element as a (p+1) x n_vars block.
  auto element_block(int element) {
    return data_.middleCols(element * n_vars_, n_vars_);
  }
  auto element_block(int element) const {
    return data_.middleCols(element * n_vars_, n_vars_);
  }

  bool same_shape(const Field& other) const {
    return n_elements_ == other.n_elements_ && n_vars_ == other.n_vars_ &&
           data_.rows() == other.data_.rows();
  }

  bool has_nan() const { return !data_.allFinite(); }

  // Arithmetic used by the Runge-Kutta steppers.
  Field& operator+=(const Field& other) {
    data_ += other.data_;
    return *this;
  }
  Field& operator*=(double a) {
    data_ *= a;
    return *this;
  }
  friend Field operator+(Field a, const Field& b) {
    a += b;
    return a;
  }
  friend Field operator*(double a, Field f) {
    f *= a;
    return f;
  }

 private:
  int n_elements_ = 0;
  int n_vars_ = 0;
  Eigen::MatrixXd data_;
};

/// Sample a per-variable initial condition into modal coefficients by
/// quadrature projection with a rule exact well past degree 2p (so the
/// modal coefficients are the L2-projection up to rounding for polynomial
/// data, and quadrature-converged for smooth data). The rule is open
/// (Gauss-Legendre): initial jumps aligned with element boundaries project
/// to exactly piecewise data instead of leaking into the neighbor element
/// through an endpoint sample.
template <typename Callable>
Field project_initial_condition(Callable&& u0, const Mesh& mesh,
                                const ReferenceElement& elem, int n_vars) {
  Field f(elem.n_coeffs(), mesh.n_elements, n_vars);
  QuadratureRule rule = gauss_legendre_rule(elem.degree + 7);
  const int nq = static_cast<int>(rule.nodes.size());
  Eigen::MatrixXd phi(nq, elem.n_coeffs());
  for (int q = 0; q < nq; ++q) {
    Eigen::VectorXd vals = legendre_values(elem.degree, rule.nodes[q]);
    for (int k = 0; k <= elem.degree; ++k) {
      double c = (elem.normalization == BasisNormalization::orthonormal)
                     ? std::sqrt((2.0 * k + 1.0) / 2.0)
                     : 1.0;
      phi(q, k) = c * vals[k];
    }
  }
  for (int i = 0; i < mesh.n_elements; ++i) {
    for (int q = 0; q < nq; ++q) {
      double x = mesh.to_physical(i, rule.nodes[q]);
      Eigen::VectorXd u = u0(x);  // n_vars entries
      for (int v = 0; v < n_vars; ++v) {
        for (int k = 0; k <= elem.degree; ++k) {
          // <u, phi_k> on the reference element; the h/2 Jacobian cancels
          // against the one in the mass matrix.
          f.coeffs(i, v)[k] += rule.weights[q] * phi(q, k) * u[v];
        }
      }
    }
    // Divide by the diagonal mass matrix.
    for (int v = 0; v < n_vars; ++v) {
      for (int k = 0; k <= elem.degree; ++k) {
        double mkk = (elem.normalization == BasisNormalization::orthonormal)
                         ? 1.0
                         : 2.0 / (2.0 * k + 1.0);
        f.coeffs(i, v)[k] /= mkk;
      }
    }
  }
  return f;
}

/// Nodal samples of variable v on element i at the element's GLL nodes.
Eigen::VectorXd nodal_values(const Field& f, int element, int var,
                             const ReferenceElement& elem);

/// All variables of element i evaluated at reference coordinate r in [-1,1].
Eigen::VectorXd point_value(const Field& f, int element, double r,
                            const ReferenceElement& elem);

}  // namespace dglab

#endif
