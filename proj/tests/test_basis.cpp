#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dglab/basis.hpp"

using namespace dglab;

namespace {

// Tiny deterministic LCG so property tests don't depend on std::random
// implementation details across platforms.
struct Lcg {
  unsigned long long s = 0x243f6a8885a308d3ull;
  double next() {  // uniform in [-1, 1]
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return 2.0 * ((s >> 11) * 0x1.0p-53) - 1.0;
  }
};

// Composite Simpson quadrature on [-1,1]: the independent integration oracle
// used against the assembled matrices.
template <typename F>
double simpson(F&& f, int panels = 2000) {
  double a = -1.0, h = 2.0 / panels, total = 0.0;
  for (int i = 0; i < panels; ++i) {
    double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
    total += h / 6.0 * (f(x0) + 4.0 * f(xm) + f(x1));
  }
  return total;
}

double phi(int k, double x, BasisNormalization norm) {
  double c = (norm == BasisNormalization::orthonormal)
                 ? std::sqrt((2.0 * k + 1.0) / 2.0)
                 : 1.0;
  return c * legendre_eval(k, x);
}

}  // namespace

TEST_CASE("legendre_eval matches closed forms and std::legendre") {
  CHECK(legendre_eval(0, 0.37) == 1.0);
  CHECK(legendre_eval(1, -0.5) == -0.5);
  CHECK(legendre_eval(5, 1.0) == 1.0);
  for (int k = 0; k <= 12; ++k) {
    CHECK(legendre_eval(k, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(legendre_eval(k, -1.0) ==
          doctest::Approx(k % 2 == 0 ? 1.0 : -1.0).epsilon(1e-14));
  }
  // closed forms for low degrees
  auto P2 = [](double x) { return 0.5 * (3 * x * x - 1); };
  auto P3 = [](double x) { return 0.5 * (5 * x * x * x - 3 * x); };
  auto P4 = [](double x) {
    return (35 * x * x * x * x - 30 * x * x + 3) / 8.0;
  };
  for (double x : {-0.77, -0.3, 0.0, 0.3, 0.99}) {
    CHECK(legendre_eval(2, x) == doctest::Approx(P2(x)).epsilon(1e-14));
    CHECK(legendre_eval(3, x) == doctest::Approx(P3(x)).epsilon(1e-14));
    CHECK(legendre_eval(4, x) == doctest::Approx(P4(x)).epsilon(1e-14));
  }
  // library cross-check on a grid
  for (int k = 0; k <= 10; ++k) {
    for (int i = 0; i <= 20; ++i) {
      double x = -1.0 + 0.1 * i;
      CHECK(legendre_eval(k, x) ==
            doctest::Approx(std::legendre(k, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("legendre_eval domain and argument errors") {
  CHECK_THROWS_AS(legendre_eval(3, 1.0 + 1e-12), std::domain_error);
  CHECK_THROWS_AS(legendre_eval(3, -1.5), std::domain_error);
  CHECK_NOTHROW(legendre_eval(3, 1.0 + 1e-15));  // inside the slack
  CHECK_THROWS_AS(legendre_eval(-1, 0.0), std::invalid_argument);
}

TEST_CASE("legendre_derivative: endpoint identity and finite differences") {
  for (int k = 1; k <= 10; ++k) {
    CHECK(legendre_derivative(k, 1.0) ==
          doctest::Approx(k * (k + 1) / 2.0).epsilon(1e-13));
  }
  const double fd_h = 1e-6;
  for (int k = 1; k <= 8; ++k) {
    for (double x : {-0.83, -0.21, 0.4, 0.77}) {
      double fd =
          (legendre_eval(k, x + fd_h) - legendre_eval(k, x - fd_h)) / (2 * fd_h);
      CHECK(legendre_derivative(k, x) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("legendre_values agrees with legendre_eval") {
  Eigen::VectorXd vals = legendre_values(9, 0.341);
  for (int k = 0; k <= 9; ++k) {
    CHECK(vals[k] == doctest::Approx(legendre_eval(k, 0.341)).epsilon(1e-15));
  }
}

TEST_CASE("gauss_lobatto_rule: closed forms and frozen 10-point values") {
  SUBCASE("two points") {
    QuadratureRule r = gauss_lobatto_rule(2);
    CHECK(r.nodes[0] == -1.0);
    CHECK(r.nodes[1] == 1.0);
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("three points") {
    QuadratureRule r = gauss_lobatto_rule(3);
    CHECK(r.nodes[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.weights[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r.weights[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  }
  SUBCASE("five points") {
    QuadratureRule r = gauss_lobatto_rule(5);
    CHECK(r.nodes[1] == doctest::Approx(-std::sqrt(3.0 / 7.0)).epsilon(1e-14));
    CHECK(r.nodes[2] == 0.0);
    CHECK(r.weights[0] == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(r.weights[1] == doctest::Approx(49.0 / 90.0).epsilon(1e-14));
    CHECK(r.weights[2] == doctest::Approx(32.0 / 45.0).epsilon(1e-14));
  }
  SUBCASE("ten points (p = 9), frozen against an independent bisection") {
    QuadratureRule r = gauss_lobatto_rule(10);
    const double nodes[] = {-1.0, -0.919533908166459, -0.738773865105505,
                            -0.477924949810445, -0.165278957666387};
    const double weights[] = {2.0 / 90.0, 0.133305990851070, 0.224889342063126,
                              0.292042683679684, 0.327539761183897};
    for (int j = 0; j < 5; ++j) {
      CHECK(r.nodes[j] == doctest::Approx(nodes[j]).epsilon(1e-13));
      CHECK(r.nodes[9 - j] == doctest::Approx(-nodes[j]).epsilon(1e-13));
      CHECK(r.weights[j] == doctest::Approx(weights[j]).epsilon(1e-12));
      CHECK(r.weights[9 - j] == doctest::Approx(weights[j]).epsilon(1e-12));
    }
  }
  SUBCASE("weights sum to 2, nodes ascending and symmetric") {
    for (int n = 2; n <= 31; ++n) {
      QuadratureRule r = gauss_lobatto_rule(n);
      CHECK(r.weights.sum() == doctest::Approx(2.0).epsilon(1e-13));
      for (int j = 0; j + 1 < n; ++j) CHECK(r.nodes[j] < r.nodes[j + 1]);
      for (int j = 0; j < n; ++j) {
        CHECK(r.nodes[j] == doctest::Approx(-r.nodes[n - 1 - j]).epsilon(1e-13));
        CHECK(r.weights[j] > 0.0);
      }
    }
  }
  SUBCASE("exactness through degree 2n-3") {
    QuadratureRule r = gauss_lobatto_rule(6);  // exact through degree 9
    for (int k = 0; k <= 9; ++k) {
      double q = 0.0;
      for (int j = 0; j < 6; ++j) q += r.weights[j] * std::pow(r.nodes[j], k);
      double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
      CHECK(q == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gauss_lobatto_rule(1), std::invalid_argument);
}

TEST_CASE("gauss_legendre_rule: closed forms, exactness, interior nodes") {
  QuadratureRule r1 = gauss_legendre_rule(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
  QuadratureRule r2 = gauss_legendre_rule(2);
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  QuadratureRule r3 = gauss_legendre_rule(3);
  CHECK(r3.nodes[0] == doctest::Approx(-0.7745966692414834).epsilon(1e-14));
  CHECK(r3.nodes[1] == 0.0);
  CHECK(r3.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
  CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));

  QuadratureRule r8 = gauss_legendre_rule(8);  // exact through degree 15
  for (int k = 0; k <= 15; ++k) {
    double q = 0.0;
    for (int j = 0; j < 8; ++j) q += r8.weights[j] * std::pow(r8.nodes[j], k);
    double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK(q == doctest::Approx(exact).epsilon(1e-13));
  }
  for (int n = 1; n <= 20; ++n) {
    QuadratureRule r = gauss_legendre_rule(n);
    CHECK(r.weights.sum() == doctest::Approx(2.0).epsilon(1e-13));
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(r.nodes[j]) < 1.0);  // strictly interior
    }
  }
  CHECK_THROWS_AS(gauss_legendre_rule(0), std::invalid_argument);
}

TEST_CASE("build_reference_element: range check and fixed conventions") {
  CHECK_THROWS_AS(build_reference_element(0), std::invalid_argument);
  CHECK_THROWS_AS(build_reference_element(31), std::invalid_argument);

  ReferenceElement e1 =
      build_reference_element(1, BasisNormalization::unnormalized);
  CHECK(e1.mass(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e1.mass(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(e1.mass(0, 1) == 0.0);

  ReferenceElement e2 =
      build_reference_element(2, BasisNormalization::unnormalized);
  // S_jk = int P_j dP_k: the (0,1) entry integrates 1 * 1 over [-1,1].
  CHECK(e2.stiffness(0, 1) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(e2.boundary(0, 0) == -1.0);
  CHECK(e2.boundary(1, 1) == 1.0);
  CHECK(e2.boundary(0, 1) == 0.0);
  CHECK(e2.boundary(1, 0) == 0.0);

  // restriction row 0 evaluates at -1, row 1 at +1
  for (int k = 0; k <= 2; ++k) {
    CHECK(e2.restriction(0, k) ==
          doctest::Approx(k % 2 == 0 ? 1.0 : -1.0).epsilon(1e-14));
    CHECK(e2.restriction(1, k) == doctest::Approx(1.0).epsilon(1e-14));
  }

  ReferenceElement e9 = build_reference_element(9);
  CHECK(e9.degree == 9);
  CHECK(e9.n_coeffs() == 10);
  CHECK(e9.eigenvalues[0] == 0.0);
  for (int k = 0; k <= 9; ++k) {
    CHECK(e9.eigenvalues[k] == doctest::Approx(k * (k + 1.0)).epsilon(1e-15));
  }
}

TEST_CASE("mass and stiffness match an independent Simpson oracle") {
  // Closed-form derivative polynomials, written out instead of reusing
  // legendre_derivative so the oracle shares no code with the assembly.
  auto dP = [](int k, double x) -> double {
    switch (k) {
      case 0: return 0.0;
      case 1: return 1.0;
      case 2: return 3.0 * x;
      case 3: return (15.0 * x * x - 3.0) / 2.0;
      case 4: return (35.0 * x * x * x - 15.0 * x) / 2.0;
      default: return 0.0;
    }
  };
  for (BasisNormalization norm :
       {BasisNormalization::orthonormal, BasisNormalization::unnormalized}) {
    ReferenceElement e = build_reference_element(4, norm);
    for (int j = 0; j <= 4; ++j) {
      for (int k = 0; k <= 4; ++k) {
        double ck = (norm == BasisNormalization::orthonormal)
                        ? std::sqrt((2.0 * k + 1.0) / 2.0)
                        : 1.0;
        double m =
            simpson([&](double x) { return phi(j, x, norm) * phi(k, x, norm); });
        CHECK(e.mass(j, k) == doctest::Approx(m).epsilon(1e-9));
        double s = simpson(
            [&](double x) { return phi(j, x, norm) * ck * dP(k, x); });
        CHECK(std::abs(e.stiffness(j, k) - s) < 1e-9);
      }
    }
  }
}

TEST_CASE("orthonormal mass is identity; GLL quadrature defect is 2 + 1/p") {
  for (int p : {3, 6, 9}) {
    ReferenceElement e = build_reference_element(p);
    CHECK((e.mass - Eigen::MatrixXd::Identity(p + 1, p + 1)).cwiseAbs().maxCoeff() <
          1e-12);
    Eigen::MatrixXd gram =
        e.vandermonde.transpose() * e.quad_weights.asDiagonal() * e.vandermonde;
    for (int j = 0; j <= p; ++j) {
      for (int k = 0; k <= p; ++k) {
        double expected = (j == k) ? 1.0 : 0.0;
        if (j == p && k == p) expected = 2.0 + 1.0 / p;  // top-mode defect
        CHECK(gram(j, k) == doctest::Approx(expected).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("differentiation matrix: D = M^-1 S and exact polynomial action") {
  ReferenceElement e = build_reference_element(9);
  CHECK((e.differentiation - e.mass_inv * e.stiffness).cwiseAbs().maxCoeff() <
        1e-13);
  for (int k = 0; k < 9; ++k) {
    Eigen::VectorXd nodal(e.nodes.size()), expect(e.nodes.size());
    for (int j = 0; j < e.nodes.size(); ++j) {
      nodal[j] = std::pow(e.nodes[j], k);
      expect[j] = k == 0 ? 0.0 : k * std::pow(e.nodes[j], k - 1);
    }
    Eigen::VectorXd modal = nodal_to_modal(nodal, e);
    Eigen::VectorXd dmodal = e.differentiation * modal;
    Eigen::VectorXd dnodal = modal_to_nodal(dmodal, e);
    CHECK((dnodal - expect).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("lift = M^-1 R^T B") {
  ReferenceElement e = build_reference_element(5);
  Eigen::MatrixXd expected = e.mass_inv * e.restriction.transpose() * e.boundary;
  CHECK((e.lift - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("nodal/modal transforms") {
  ReferenceElement e = build_reference_element(7);
  SUBCASE("round trip") {
    Lcg rng;
    for (int rep = 0; rep < 20; ++rep) {
      Eigen::VectorXd v(8);
      for (int i = 0; i < 8; ++i) v[i] = rng.next();
      Eigen::VectorXd back = modal_to_nodal(nodal_to_modal(v, e), e);
      CHECK((back - v).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("constants are pure mode zero") {
    Eigen::VectorXd c = Eigen::VectorXd::Constant(8, 3.25);
    Eigen::VectorXd modal = nodal_to_modal(c, e);
    CHECK(modal[0] == doctest::Approx(3.25 * std::sqrt(2.0)).epsilon(1e-13));
    for (int k = 1; k <= 7; ++k) CHECK(std::abs(modal[k]) < 1e-12);
  }
  SUBCASE("P_p samples land in slot p") {
    Eigen::VectorXd samples(8);
    for (int j = 0; j < 8; ++j) samples[j] = legendre_eval(7, e.nodes[j]);
    Eigen::VectorXd modal = nodal_to_modal(samples, e);
    for (int k = 0; k < 7; ++k) CHECK(std::abs(modal[k]) < 1e-12);
    CHECK(modal[7] == doctest::Approx(std::sqrt(2.0 / 15.0)).epsilon(1e-12));
  }
  SUBCASE("length mismatch throws") {
    Eigen::VectorXd bad(5);
    bad.setZero();
    CHECK_THROWS_AS(nodal_to_modal(bad, e), std::invalid_argument);
    CHECK_THROWS_AS(modal_to_nodal(bad, e), std::invalid_argument);
  }
}

TEST_CASE("apply_legendre_viscous_operator is the eigenvalue map") {
  ReferenceElement e = build_reference_element(5);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(6);
  u[0] = 1.0;
  CHECK(apply_legendre_viscous_operator(u, e).cwiseAbs().maxCoeff() == 0.0);
  u.setZero();
  u[3] = 1.0;
  Eigen::VectorXd r = apply_legendre_viscous_operator(u, e);
  CHECK(r[3] == doctest::Approx(-12.0).epsilon(1e-15));
  u.setZero();
  u[1] = 1.0;
  u[2] = 1.0;
  r = apply_legendre_viscous_operator(u, e);
  CHECK(r[1] == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(r[2] == doctest::Approx(-6.0).epsilon(1e-15));
  CHECK(r[0] == 0.0);
}

TEST_CASE("assembled weak viscous operator reproduces the eigen-relation") {
  for (BasisNormalization norm :
       {BasisNormalization::orthonormal, BasisNormalization::unnormalized}) {
    for (int p : {5, 9}) {
      ReferenceElement e = build_reference_element(p, norm);
      Eigen::MatrixXd A = assemble_weak_legendre_viscous(e);
      for (int k = 0; k <= p; ++k) {
        Eigen::VectorXd ek = Eigen::VectorXd::Unit(p + 1, k);
        Eigen::VectorXd r = A * ek;
        double lambda = k * (k + 1.0);
        for (int j = 0; j <= p; ++j) {
          double expected = (j == k) ? -lambda : 0.0;
          double tol = 1e-10 * std::max(1.0, lambda);
          CHECK(std::abs(r[j] - expected) < tol);
        }
      }
    }
  }
}
