#ifndef DGLAB_BASIS_HPP
#define DGLAB_BASIS_HPP

#include <Eigen/Dense>

namespace dglab {

// Legendre polynomial machinery and the reference-element operators of the
// DG scheme on [-1,1]. All matrices act on coefficient vectors of the chosen
// modal basis; the orthonormal normalization is the one used for solution
// storage, the unnormalized one exists for formula-level work and tests.

enum class BasisNormalization { orthonormal, unnormalized };

/// Gauss-Lobatto-Legendre points and weights on [-1,1].
struct QuadratureRule {
  Eigen::VectorXd nodes;    // ascending, includes -1 and +1
  Eigen::VectorXd weights;  // positive, sums to 2
};

/// Value of the unnormalized Legendre polynomial P_k(x), three-term recurrence.
/// Throws std::domain_error for |x| > 1 + 1e-14.
double legendre_eval(int k, double x);

/// d/dx P_k(x), evaluated by the joint value/derivative recurrence
/// (well defined at x = ±1, unlike the (1-x^2) division formulas).
double legendre_derivative(int k, double x);

/// P_0(x) .. P_kmax(x) in one sweep.
Eigen::VectorXd legendre_values(int kmax, double x);

/// GLL rule with n_points >= 2. Interior nodes are Newton-refined roots of
/// P'_{n-1} to 1e-14 (at most 100 iterations), then symmetrized about 0.
QuadratureRule gauss_lobatto_rule(int n_points);

/// Gauss-Legendre rule with n_points >= 1 (all nodes interior, exact through
/// degree 2n-1). Used for initial-condition projection so that jumps sitting
/// exactly on element boundaries are never sampled from the wrong side.
QuadratureRule gauss_legendre_rule(int n_points);

/// Per-degree operator set of the 1D DG scheme.
///
/// Conventions fixed here and relied on everywhere else:
///  - nodes are GLL, ascending, node 0 = -1 and node p = +1;
///  - restriction row 0 evaluates at x = -1, row 1 at x = +1, pairing with
///    boundary matrix B = diag(-1, +1) so that
///      du/dt = -D f + M^{-1} R^T B (R f - f_num)
///    is the strong form with outward orientation;
///  - vandermonde maps modal -> nodal; mass/stiffness are exact (the GLL rule
///    integrates degree <= 2p-1, which covers S; M is assembled analytically).
struct ReferenceElement {
  int degree = 0;                     // p
  BasisNormalization normalization = BasisNormalization::orthonormal;
  Eigen::VectorXd nodes;              // p+1 GLL points
  Eigen::VectorXd quad_weights;       // p+1 GLL weights
  Eigen::MatrixXd vandermonde;        // V_jk = phi_k(node_j)
  Eigen::MatrixXd vandermonde_inv;    // nodal -> modal
  Eigen::MatrixXd mass;               // M (diagonal, exact)
  Eigen::MatrixXd mass_inv;           // M^{-1}
  Eigen::MatrixXd stiffness;          // S_jk = int phi_j dphi_k
  Eigen::MatrixXd differentiation;    // D = M^{-1} S
  Eigen::MatrixXd restriction;        // R, 2 x (p+1): row 0 at -1, row 1 at +1
  Eigen::MatrixXd deriv_restriction;  // dphi_k at -1 / +1, same row order
  Eigen::Matrix2d boundary;           // B = diag(-1, +1)
  Eigen::MatrixXd lift;               // M^{-1} R^T B
  Eigen::VectorXd eigenvalues;        // lambda_k = k(k+1)

  int n_coeffs() const { return degree + 1; }
};

/// Assemble all operators for degree 1 <= p <= 30.
/// Throws std::invalid_argument outside that range.
ReferenceElement build_reference_element(int degree,
                                         BasisNormalization normalization =
                                             BasisNormalization::orthonormal);

/// Nodal samples at the element's GLL nodes -> modal coefficients.
/// Throws std::invalid_argument on length mismatch.
Eigen::VectorXd nodal_to_modal(const Eigen::VectorXd& nodal_values,
                               const ReferenceElement& elem);

/// Modal coefficients -> nodal samples.
Eigen::VectorXd modal_to_nodal(const Eigen::VectorXd& modal_coeffs,
                               const ReferenceElement& elem);

/// Modal coefficients of d/dx (1-x^2) d/dx u, computed exactly through the
/// Sturm-Liouville eigenvalues: coefficient k maps to -k(k+1) * u_k.
Eigen::VectorXd apply_legendre_viscous_operator(const Eigen::VectorXd& modal_coeffs,
                                                const ReferenceElement& elem);

/// Quadrature-assembled weak form of the same operator:
///   A = M^{-1} L,  L_jk = -sum_q w_q phi'_j(x_q) (1-x_q^2) phi'_k(x_q)
/// (the boundary term vanishes since 1-x^2 does at +-1). Assembled with a
/// p+3 point rule so the full degree-2p integrand is integrated exactly.
Eigen::MatrixXd assemble_weak_legendre_viscous(const ReferenceElement& elem);

}  // namespace dglab

#endif
