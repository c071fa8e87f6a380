#include "dglab/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dglab {

namespace {

constexpr double kDomainSlack = 1e-14;
constexpr double kNewtonTol = 1e-14;
constexpr int kNewtonMaxIters = 100;

void check_domain(double x) {
  if (std::abs(x) > 1.0 + kDomainSlack) {
    throw std::domain_error("legendre_eval: x = " + std::to_string(x) +
                            " outside [-1, 1]");
  }
}

// Joint value/derivative recurrence for P_k and P'_k at a single point.
// Returns {P_k(x), P'_k(x)}.
std::pair<double, double> legendre_pair(int k, double x) {
  double p_prev = 1.0, d_prev = 0.0;  // P_0, P_0'
  if (k == 0) return {p_prev, d_prev};
  double p = x, d = 1.0;  // P_1, P_1'
  for (int n = 1; n < k; ++n) {
    // P_{n+1} = ((2n+1) x P_n - n P_{n-1}) / (n+1)
    // P'_{n+1} = ((2n+1)(P_n + x P'_n) - n P'_{n-1}) / (n+1)
    double p_next = ((2 * n + 1) * x * p - n * p_prev) / (n + 1);
    double d_next = ((2 * n + 1) * (p + x * d) - n * d_prev) / (n + 1);
    p_prev = p;
    d_prev = d;
    p = p_next;
    d = d_next;
  }
  return {p, d};
}

double normalization_factor(int k, BasisNormalization norm) {
  if (norm == BasisNormalization::unnormalized) return 1.0;
  return std::sqrt((2.0 * k + 1.0) / 2.0);
}

}  // namespace

double legendre_eval(int k, double x) {
  if (k < 0) throw std::invalid_argument("legendre_eval: negative degree");
  check_domain(x);
  return legendre_pair(k, x).first;
}

double legendre_derivative(int k, double x) {
  if (k < 0) throw std::invalid_argument("legendre_derivative: negative degree");
  check_domain(x);
  return legendre_pair(k, x).second;
}

Eigen::VectorXd legendre_values(int kmax, double x) {
  if (kmax < 0) throw std::invalid_argument("legendre_values: negative degree");
  check_domain(x);
  Eigen::VectorXd vals(kmax + 1);
  vals[0] = 1.0;
  if (kmax == 0) return vals;
  vals[1] = x;
  for (int n = 1; n < kmax; ++n) {
    vals[n + 1] = ((2 * n + 1) * x * vals[n] - n * vals[n - 1]) / (n + 1);
  }
  return vals;
}

QuadratureRule gauss_lobatto_rule(int n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("gauss_lobatto_rule: need at least 2 points");
  }
  const int n = n_points;
  const int p = n - 1;  // rule is built on P_p
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.nodes[0] = -1.0;
  rule.nodes[n - 1] = 1.0;

  // Interior nodes: roots of P'_p, seeded by Chebyshev-Gauss-Lobatto points
  // and refined with Newton on P'_p (its derivative comes from the
  // Legendre ODE: (1-x^2) P''_p = 2x P'_p - p(p+1) P_p).
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    double x = -std::cos(M_PI * j / p);
    for (int it = 0; it < kNewtonMaxIters; ++it) {
      auto [pp, dp] = legendre_pair(p, x);
      double second = (2.0 * x * dp - p * (p + 1.0) * pp) / (1.0 - x * x);
      double dx = dp / second;
      x -= dx;
      if (std::abs(dx) < kNewtonTol) break;
    }
    rule.nodes[j] = x;
    rule.nodes[n - 1 - j] = -x;  // symmetrize
  }
  if (n % 2 == 1) rule.nodes[(n - 1) / 2] = 0.0;

  // w_j = 2 / (p (p+1) P_p(x_j)^2)
  for (int j = 0; j < n; ++j) {
    double pp = legendre_pair(p, rule.nodes[j]).first;
    rule.weights[j] = 2.0 / (p * (p + 1.0) * pp * pp);
  }
  return rule;
}

QuadratureRule gauss_legendre_rule(int n_points) {
  if (n_points < 1) {
    throw std::invalid_argument("gauss_legendre_rule: need at least 1 point");
  }
  const int n = n_points;
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Roots of P_n, seeded by the Chebyshev asymptotic and refined with
  // Newton. All nodes are interior, which is what the initial-condition
  // projection wants: discontinuities aligned with element boundaries are
  // never sampled on the wrong side.
  for (int j = 0; j < (n + 1) / 2; ++j) {
    double x = -std::cos(M_PI * (j + 0.75) / (n + 0.5));
    for (int it = 0; it < kNewtonMaxIters; ++it) {
      auto [pn, dn] = legendre_pair(n, x);
      double dx = pn / dn;
      x -= dx;
      if (std::abs(dx) < kNewtonTol) break;
    }
    rule.nodes[j] = x;
    rule.nodes[n - 1 - j] = -x;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  for (int j = 0; j < n; ++j) {
    double x = rule.nodes[j];
    double dn = legendre_pair(n, x).second;
    rule.weights[j] = 2.0 / ((1.0 - x * x) * dn * dn);
  }
  return rule;
}

ReferenceElement build_reference_element(int degree,
                                         BasisNormalization normalization) {
  if (degree < 1 || degree > 30) {
    throw std::invalid_argument("build_reference_element: degree " +
                                std::to_string(degree) +
                                " outside supported range [1, 30]");
  }
  ReferenceElement elem;
  elem.degree = degree;
  elem.normalization = normalization;

  const int n = degree + 1;
  QuadratureRule rule = gauss_lobatto_rule(n);
  elem.nodes = rule.nodes;
  elem.quad_weights = rule.weights;

  // Vandermonde and its derivative counterpart at the GLL nodes.
  elem.vandermonde.resize(n, n);
  Eigen::MatrixXd dvandermonde(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      double c = normalization_factor(k, normalization);
      elem.vandermonde(j, k) = c * legendre_eval(k, elem.nodes[j]);
      dvandermonde(j, k) = c * legendre_derivative(k, elem.nodes[j]);
    }
  }
  elem.vandermonde_inv = elem.vandermonde.partialPivLu().inverse();

  // Mass matrix is diagonal and known in closed form; do not use the GLL
  // rule here (it is inexact for the degree-2p product phi_p * phi_p).
  elem.mass = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double c = normalization_factor(k, normalization);
    elem.mass(k, k) = c * c * 2.0 / (2.0 * k + 1.0);
  }
  elem.mass_inv = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) elem.mass_inv(k, k) = 1.0 / elem.mass(k, k);

  // Stiffness S_jk = int phi_j phi'_k: integrand has degree <= 2p-1, so the
  // GLL rule is exact.
  elem.stiffness = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int q = 0; q < n; ++q) {
        s += elem.quad_weights[q] * elem.vandermonde(q, j) * dvandermonde(q, k);
      }
      elem.stiffness(j, k) = s;
    }
  }
  elem.differentiation = elem.mass_inv * elem.stiffness;

  elem.restriction.resize(2, n);
  elem.deriv_restriction.resize(2, n);
  for (int k = 0; k < n; ++k) {
    double c = normalization_factor(k, normalization);
    elem.restriction(0, k) = c * legendre_eval(k, -1.0);
    elem.restriction(1, k) = c * legendre_eval(k, 1.0);
    elem.deriv_restriction(0, k) = c * legendre_derivative(k, -1.0);
    elem.deriv_restriction(1, k) = c * legendre_derivative(k, 1.0);
  }
  elem.boundary = Eigen::Matrix2d::Zero();
  elem.boundary(0, 0) = -1.0;
  elem.boundary(1, 1) = 1.0;
  elem.lift = elem.mass_inv * elem.restriction.transpose() * elem.boundary;

  elem.eigenvalues.resize(n);
  for (int k = 0; k < n; ++k) elem.eigenvalues[k] = double(k) * (k + 1);

  return elem;
}

Eigen::VectorXd nodal_to_modal(const Eigen::VectorXd& nodal_values,
                               const ReferenceElement& elem) {
  if (nodal_values.size() != elem.n_coeffs()) {
    throw std::invalid_argument("nodal_to_modal: expected " +
                                std::to_string(elem.n_coeffs()) +
                                " values, got " +
                                std::to_string(nodal_values.size()));
  }
  return elem.vandermonde_inv * nodal_values;
}

Eigen::VectorXd modal_to_nodal(const Eigen::VectorXd& modal_coeffs,
                               const ReferenceElement& elem) {
  if (modal_coeffs.size() != elem.n_coeffs()) {
    throw std::invalid_argument("modal_to_nodal: expected " +
                                std::to_string(elem.n_coeffs()) +
                                " coefficients, got " +
                                std::to_string(modal_coeffs.size()));
  }
  return elem.vandermonde * modal_coeffs;
}

Eigen::VectorXd apply_legendre_viscous_operator(
    const Eigen::VectorXd& modal_coeffs, const ReferenceElement& elem) {
  if (modal_coeffs.size() != elem.n_coeffs()) {
    throw std::invalid_argument(
        "apply_legendre_viscous_operator: coefficient count mismatch");
  }
  return (-elem.eigenvalues.array() * modal_coeffs.array()).matrix();
}

Eigen::MatrixXd assemble_weak_legendre_viscous(const ReferenceElement& elem) {
  const int n = elem.n_coeffs();
  // Use a rule that is exact for the full degree-2p integrand so that only
  // the genuinely non-polynomial part (there is none here) would be
  // approximated; 2p integrand degree needs >= p+1 GLL points + 1.
  QuadratureRule rule = gauss_lobatto_rule(n + 2);
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int q = 0; q < rule.nodes.size(); ++q) {
    double x = rule.nodes[q];
    double w = rule.weights[q];
    Eigen::VectorXd dphi(n);
    for (int k = 0; k < n; ++k) {
      double c = (elem.normalization == BasisNormalization::orthonormal)
                     ? std::sqrt((2.0 * k + 1.0) / 2.0)
                     : 1.0;
      dphi[k] = c * legendre_derivative(k, x);
    }
    L.noalias() += -w * (1.0 - x * x) * dphi * dphi.transpose();
  }
  return elem.mass_inv * L;
}

}  // namespace dglab
