#include "dglab/semidisc.hpp"

#include <stdexcept>
#include <vector>

#if defined(DGLAB_HAVE_PAR_EXEC)
#include <algorithm>
#include <execution>
#include <numeric>
#endif

namespace dglab {

namespace {

template <typename Fn>
void for_each_element(int n, bool parallel, Fn&& fn) {
#if defined(DGLAB_HAVE_PAR_EXEC)
  if (parallel) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::for_each(std::execution::par, idx.begin(), idx.end(), fn);
    return;
  }
#else
  (void)parallel;
#endif
  for (int i = 0; i < n; ++i) fn(i);
}

// Solution traces at every element end: column i of `left`/`right` holds the
// state at the left/right end of element i (one row per variable).
struct Traces {
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
};

Traces gather_traces(const Field& field, const ReferenceElement& elem) {
  const int I = field.n_elements();
  const int nv = field.n_vars();
  Traces tr;
  tr.left.resize(nv, I);
  tr.right.resize(nv, I);
  for (int i = 0; i < I; ++i) {
    Eigen::MatrixXd ends = elem.restriction * field.element_block(i);  // 2 x nv
    tr.left.col(i) = ends.row(0).transpose();
    tr.right.col(i) = ends.row(1).transpose();
  }
  return tr;
}

// Exterior states seen across interface j (j = 0..I: interface j is the left
// end of element j, interface I the right end of element I-1).
Eigen::VectorXd exterior_left_of(int j, const Traces& tr, const Mesh& mesh) {
  // State on the smaller-x side of interface j.
  const int I = mesh.n_elements;
  if (j > 0) return tr.right.col(j - 1);
  if (mesh.boundary == BoundaryKind::periodic) return tr.right.col(I - 1);
  return mesh.ghost_left;
}

Eigen::VectorXd exterior_right_of(int j, const Traces& tr, const Mesh& mesh) {
  // State on the larger-x side of interface j.
  const int I = mesh.n_elements;
  if (j < I) return tr.left.col(j);
  if (mesh.boundary == BoundaryKind::periodic) return tr.left.col(0);
  return mesh.ghost_right;
}

// eps on element i at an arbitrary reference coordinate, reproducing how the
// field was assembled per kind (the stored nodal samples only cover the GLL
// nodes).
double eps_at(const ViscosityField& visc, int i, double r) {
  switch (visc.distribution.kind) {
    case ViscosityKind::piecewise_constant:
      return visc.strengths[i];
    case ViscosityKind::c0_linear:
      return 0.5 * (1.0 - r) * visc.vertex_values[i] +
             0.5 * (1.0 + r) * visc.vertex_values[i + 1];
    default:
      return visc.strengths[i] * distribution_value(visc.distribution, r);
  }
}

}  // namespace

Field hyperbolic_rhs(const Field& field, const ConservationLaw& law,
                     FluxKind flux_kind, const Mesh& mesh,
                     const ReferenceElement& elem, bool parallel) {
  const int I = field.n_elements();
  const int nv = field.n_vars();
  const int np = elem.n_coeffs();
  if (mesh.boundary == BoundaryKind::dirichlet_outflow &&
      (mesh.ghost_left.size() != nv || mesh.ghost_right.size() != nv)) {
    throw std::invalid_argument(
        "hyperbolic_rhs: dirichlet_outflow mesh is missing ghost states");
  }

  Traces tr = gather_traces(field, elem);

  // Serial interface sweep: one numerical flux per interface, shared by the
  // two adjoining elements.
  Eigen::MatrixXd fnum(nv, I + 1);
  for (int j = 0; j <= I; ++j) {
    if (j == I && mesh.boundary == BoundaryKind::periodic) {
      fnum.col(I) = fnum.col(0);
      break;
    }
    Eigen::VectorXd ul = exterior_left_of(j, tr, mesh);
    Eigen::VectorXd ur = exterior_right_of(j, tr, mesh);
    law.check_admissible(ul);
    law.check_admissible(ur);
    fnum.col(j) = law.numerical_flux(flux_kind, ul, ur);
  }

  Field out(np, I, nv);
  const double jac = 2.0 / mesh.h();
  for_each_element(I, parallel, [&](int i) {
    Eigen::MatrixXd nodal = elem.vandermonde * field.element_block(i);
    Eigen::MatrixXd nodal_flux(np, nv);
    Eigen::VectorXd state(nv);
    for (int q = 0; q < np; ++q) {
      state = nodal.row(q).transpose();
      law.check_admissible(state);
      nodal_flux.row(q) = law.flux(state).transpose();
    }
    Eigen::MatrixXd modal_flux = elem.vandermonde_inv * nodal_flux;
    Eigen::MatrixXd flux_jump =
        elem.restriction * modal_flux;               // interior trace, 2 x nv
    flux_jump.row(0) -= fnum.col(i).transpose();     // left interface
    flux_jump.row(1) -= fnum.col(i + 1).transpose(); // right interface
    out.element_block(i) =
        jac * (-elem.differentiation * modal_flux + elem.lift * flux_jump);
  });
  return out;
}

Field viscous_rhs(const Field& field, const ViscosityField& visc,
                  const Mesh& mesh, const ReferenceElement& elem,
                  bool parallel) {
  const int I = field.n_elements();
  const int nv = field.n_vars();
  const int np = elem.n_coeffs();
  if (visc.nodal_samples.rows() != np || visc.nodal_samples.cols() != I) {
    throw std::invalid_argument("viscous_rhs: viscosity field shape mismatch");
  }
  if (visc.nodal_samples.minCoeff() < 0.0) {
    throw std::invalid_argument("viscous_rhs: negative viscosity sample");
  }
  if (visc.distribution.kind == ViscosityKind::c0_linear &&
      visc.vertex_values.size() != I + 1) {
    throw std::invalid_argument(
        "viscous_rhs: c0_linear field is missing vertex values");
  }

  const double jac = 2.0 / mesh.h();
  const bool periodic = (mesh.boundary == BoundaryKind::periodic);

  // Strong-form derivative with central traces:
  //   w = jac * (D u - lift (R u - u_star)),
  // u_star = average of the two traces at interior interfaces, the interior
  // trace itself at physical boundaries (so the correction vanishes there).
  auto strong_derivative = [&](const Field& in) {
    Traces tr = gather_traces(in, elem);
    Eigen::MatrixXd star(nv, I + 1);
    for (int j = 0; j <= I; ++j) {
      bool physical = !periodic && (j == 0 || j == I);
      if (physical) {
        star.col(j) = (j == 0) ? tr.left.col(0) : tr.right.col(I - 1);
      } else if (j == I) {
        star.col(I) = star.col(0);
      } else {
        Eigen::VectorXd ul = exterior_left_of(j, tr, mesh);
        Eigen::VectorXd ur = exterior_right_of(j, tr, mesh);
        star.col(j) = 0.5 * (ul + ur);
      }
    }
    Field out(np, I, nv);
    for_each_element(I, parallel, [&](int i) {
      Eigen::MatrixXd jump = elem.restriction * in.element_block(i);
      jump.row(0) -= star.col(i).transpose();
      jump.row(1) -= star.col(i + 1).transpose();
      out.element_block(i) =
          jac * (elem.differentiation * in.element_block(i) - elem.lift * jump);
    });
    return out;
  };

  // Pass 1: q = eps * u_x, projected back onto the polynomial space with a
  // dense Gauss rule. Forming the product at the GLL nodes instead would pin
  // it to zero at the element ends whenever the shape vanishes there (all the
  // compactly supported kinds), which acts like a spurious kink in the
  // viscous flux at every element edge and shows up as overshoot around
  // captured shocks. The projection keeps the smooth decay those shapes were
  // chosen for, and because the weights are positive and eps >= 0 the cell
  // part of the energy balance, sum_q w_q eps_q u_x(r_q)^2, is a true
  // dissipation for any rule.
  Field grad = strong_derivative(field);
  QuadratureRule rule = gauss_legendre_rule(elem.degree + 8);
  const int nq = static_cast<int>(rule.nodes.size());
  Eigen::MatrixXd phi(nq, np);
  for (int qn = 0; qn < nq; ++qn) {
    Eigen::VectorXd vals = legendre_values(elem.degree, rule.nodes[qn]);
    for (int k = 0; k < np; ++k) {
      double c = (elem.normalization == BasisNormalization::orthonormal)
                     ? std::sqrt((2.0 * k + 1.0) / 2.0)
                     : 1.0;
      phi(qn, k) = c * vals[k];
    }
  }
  Field q(np, I, nv);
  for_each_element(I, parallel, [&](int i) {
    Eigen::VectorXd weighted(nq);
    for (int qn = 0; qn < nq; ++qn) {
      weighted[qn] = rule.weights[qn] * eps_at(visc, i, rule.nodes[qn]);
    }
    if ((weighted.array() == 0.0).all()) return;  // q stays zero
    q.element_block(i) =
        elem.mass_inv * (phi.transpose() *
                         (weighted.asDiagonal() * (phi * grad.element_block(i))));
  });

  // Pass 2: tendency = q_x.
  return strong_derivative(q);
}

Field full_rhs(const Field& field, const ConservationLaw& law,
               FluxKind flux_kind, const ViscosityField& visc,
               const Mesh& mesh, const ReferenceElement& elem, bool parallel) {
  Field out = hyperbolic_rhs(field, law, flux_kind, mesh, elem, parallel);
  out += viscous_rhs(field, visc, mesh, elem, parallel);
  return out;
}

}  // namespace dglab
