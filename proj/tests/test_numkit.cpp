#include <cmath>
#include <random>

#include "doctest.h"
#include "stratweyl/basis.hpp"
#include "stratweyl/diffop.hpp"
#include "stratweyl/hermite.hpp"
#include "stratweyl/linalg.hpp"
#include "stratweyl/multi_index.hpp"
#include "stratweyl/quadrature.hpp"
#include "test_util.hpp"

using namespace sw;

TEST_CASE("gauss_hermite small orders") {
  auto r1 = gauss_hermite(1);
  REQUIRE(r1.order() == 1);
  CHECK(std::abs(r1.nodes[0]) < 1e-15);
  CHECK(std::abs(r1.weights[0] - std::sqrt(kPi)) < 1e-14);
  for (int order : {2, 5, 17, 60}) {
    auto r = gauss_hermite(order);
    double m2 = 0.0;
    for (int i = 0; i < order; ++i) m2 += r.weights[i] * r.nodes[i] * r.nodes[i];
    CHECK(std::abs(m2 - std::sqrt(kPi) / 2) < 1e-13);
  }
  CHECK_THROWS_AS(gauss_hermite(kMaxGaussHermiteOrder + 1), NumericError);
  CHECK_THROWS(gauss_hermite(0));
}

TEST_CASE("gauss_hermite exact through degree 2*order-1") {
  // Moments of e^{-x^2}: m_{2k} = Gamma(k + 1/2).
  for (int order : {3, 10, 30}) {
    auto r = gauss_hermite(order);
    for (int d = 0; d <= 2 * order - 1; ++d) {
      double s = 0.0, scale = 0.0;
      for (int i = 0; i < order; ++i) {
        s += r.weights[i] * std::pow(r.nodes[i], d);
        scale += r.weights[i] * std::pow(std::abs(r.nodes[i]), d);
      }
      const double exact = d % 2 ? 0.0 : std::tgamma(d / 2 + 0.5);
      CHECK(std::abs(s - exact) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("Hermite functions orthonormal under quadrature") {
  auto r = gauss_hermite(40);
  for (double lam : {0.5, 1.0, 2.0}) {
    // int h_j h_k dx with x = t / sqrt(lam): weight e^{t^2} absorbed by the table without Gaussian.
    for (int j = 0; j <= 15; ++j) {
      for (int k = 0; k <= 15; ++k) {
        double s = 0.0;
        for (int i = 0; i < r.order(); ++i) {
          const double x = r.nodes[i] / std::sqrt(lam);
          const auto t = hermite_poly_table(15, lam, x);
          s += r.weights[i] * t[j] * t[k] / std::sqrt(lam);
        }
        CHECK(std::abs(s - (j == k ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("hermite_fn values and recurrence residual") {
  CHECK(std::abs(hermite_fn(0, 1.0, 0.0) - std::pow(kPi, -0.25)) < 1e-15);
  CHECK(std::abs(hermite_fn(1, 1.7, 0.0)) < 1e-15);
  for (double lam : {0.5, 1.0, 2.0}) {
    for (double x : gauss_hermite(20).nodes) {
      const auto t = hermite_fn_table(31, lam, x);
      for (int k = 1; k < 30; ++k) {
        const double res = x * t[k] * std::sqrt(2 * lam) - std::sqrt(k + 1.0) * t[k + 1] - std::sqrt(double(k)) * t[k - 1];
        CHECK(std::abs(res) < 1e-9);
      }
      CHECK(std::abs(t[7] - hermite_fn(7, lam, x)) < 1e-15);
    }
  }
  CHECK_THROWS(hermite_fn(-1, 1.0, 0.0));
  CHECK_THROWS(hermite_fn(kMaxHermiteIndex + 1, 1.0, 0.0));
}

TEST_CASE("polar_unitary") {
  CHECK(max_abs_diff(polar_unitary(CMatrix::Identity(4, 4)), CMatrix::Identity(4, 4)) < 1e-15);
  CMatrix d = CMatrix::Zero(3, 3);
  d.diagonal() << 2.0, 0.5, 7.0;
  CHECK(max_abs_diff(polar_unitary(d), CMatrix::Identity(3, 3)) < 1e-14);
  std::mt19937_64 rng(11);
  CMatrix m = swtest::random_matrix(rng, 6, 6);
  CMatrix u = polar_unitary(m);
  CHECK(max_abs_diff(u.adjoint() * u, CMatrix::Identity(6, 6)) <= 1e-12);
  CMatrix p = m * u.adjoint();
  CHECK(max_abs_diff(p, p.adjoint()) < 1e-12);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  CMatrix sing = CMatrix::Zero(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(polar_unitary(sing), NumericError);
}

TEST_CASE("psd_inv_sqrt") {
  CHECK(max_abs_diff(psd_inv_sqrt(CMatrix::Identity(3, 3)), CMatrix::Identity(3, 3)) < 1e-15);
  CMatrix d = CMatrix::Zero(2, 2);
  d.diagonal() << 4.0, 9.0;
  CMatrix r = psd_inv_sqrt(d);
  CHECK(std::abs(r(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(r(1, 1) - 1.0 / 3.0) < 1e-15);
  std::mt19937_64 rng(5);
  CMatrix a = swtest::random_matrix(rng, 5, 5);
  CMatrix m = a * a.adjoint() + 0.1 * CMatrix::Identity(5, 5);
  CMatrix rm = psd_inv_sqrt(m);
  CHECK(max_abs_diff(rm * m * rm, CMatrix::Identity(5, 5)) <= 1e-10);
  CMatrix s = psd_sqrt(m);
  CHECK(max_abs_diff(s * s, m) <= 1e-10);
  CMatrix neg = -CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(psd_inv_sqrt(neg), NumericError);
}

TEST_CASE("conditioned factorizations") {
  std::mt19937_64 rng(9);
  CMatrix q = polar_unitary(swtest::random_matrix(rng, 5, 5));
  CMatrix d = CMatrix::Zero(5, 5);
  d.diagonal() << 1.0, 1e-2, 1e-4, 1e-5, 1e-6;
  CMatrix m = q * d * q.adjoint();
  CMatrix rm = psd_inv_sqrt(m);
  CHECK(max_abs_diff(rm * m * rm, CMatrix::Identity(5, 5)) <= 1e-10 * 1e3);
  CMatrix u = polar_unitary(q * d);
  CHECK(max_abs_diff(u.adjoint() * u, CMatrix::Identity(5, 5)) <= 1e-10);
}

TEST_CASE("multi-index enumeration") {
  MultiIndexSet s(2, 3);
  CHECK(s.size() == 10);
  CHECK(s.prefix_size(0) == 1);
  CHECK(s.prefix_size(1) == 3);
  CHECK(s.prefix_size(3) == 10);
  for (int i = 0; i < s.size(); ++i) {
    CHECK(s.index_of(s[i]) == i);
    if (i > 0) CHECK(s.degree(i) >= s.degree(i - 1));
  }
  CHECK(s.index_of({4, 0}) == -1);
  MultiIndexSet s2(2, 3);
  CHECK(s2.all() == s.all());
  CHECK(multi_factorial({3, 2}) == 12.0);
  CHECK(binomial(6, 2) == 15.0);
}

TEST_CASE("DiffOp algebra") {
  const DiffOp m = DiffOp::mult(1, 0), d = DiffOp::deriv(1, 0);
  CHECK(commutator(d, m).max_coeff_diff(DiffOp::identity(1)) == 0.0);
  // d^2 x^2 = x^2 d^2 + 4 x d + 2
  DiffOp lhs = d * d * m * m;
  DiffOp rhs = DiffOp::term({2}, {2}) + DiffOp::term({1}, {1}, 4.0) + DiffOp::identity(1, 2.0);
  CHECK(lhs.max_coeff_diff(rhs) == 0.0);
  // Composition agrees with sequential application.
  Poly f = Poly::monomial({5}, 1.0) + Poly::monomial({2}, cplx(0, 3));
  DiffOp a = m * d + DiffOp::term({0}, {2}, 2.0);
  DiffOp b = d * d * m + DiffOp::identity(1, cplx(1, 1));
  CHECK((a * b).apply(f).max_coeff_diff(a.apply(b.apply(f))) < 1e-12);
  DiffOp m2 = DiffOp::mult(2, 1), d2 = DiffOp::deriv(2, 0);
  CHECK(commutator(d2, m2).coefficients().empty());
}

TEST_CASE("Hermite ladder materialization") {
  const double lam = 1.3;
  Basis b(BasisKind::Hermite, 1, 12, lam);
  const DiffOp x = DiffOp::mult(1, 0), d = DiffOp::deriv(1, 0);
  CMatrix X = materialize_hermite(x, b), D = materialize_hermite(d, b);
  CMatrix comm = materialize_hermite(commutator(d, x), b);
  CHECK(max_abs_diff(comm, CMatrix::Identity(13, 13)) < 1e-14);
  // Interior block of matrix commutator equals identity.
  CMatrix mc = D * X - X * D;
  CHECK(max_abs_diff(leading_block(mc, 12), CMatrix::Identity(12, 12)) < 1e-13);
  // Quadratic operator compresses exactly: harmonic oscillator is diagonal.
  DiffOp ho = (-1.0 / (2 * lam)) * (d * d) + (lam / 2.0) * (x * x);
  CMatrix H = materialize_hermite(ho, b);
  for (int k = 0; k <= 12; ++k) CHECK(std::abs(H(k, k) - (k + 0.5)) < 1e-12);
  CHECK(max_abs(H - CMatrix(H.diagonal().asDiagonal())) < 1e-12);
  // Against a quadrature oracle for x h_k.
  auto r = gauss_hermite(40);
  for (int j = 0; j <= 12; ++j)
    for (int k = 0; k <= 12; ++k) {
      double s = 0.0;
      for (int i = 0; i < r.order(); ++i) {
        const double xx = r.nodes[i] / std::sqrt(lam);
        auto t = hermite_poly_table(13, lam, xx);
        s += r.weights[i] * t[j] * xx * t[k] / std::sqrt(lam);
      }
      CHECK(std::abs(X(j, k) - s) < 1e-12);
    }
}

TEST_CASE("Fock materialization and coefficient round trip") {
  const double lam = 0.7;
  Basis b(BasisKind::Fock, 2, 6, lam);
  const DiffOp z = DiffOp::mult(2, 0), dz = DiffOp::deriv(2, 0);
  CMatrix Z = materialize_fock(z, b), Dz = materialize_fock(dz, b);
  // Adjoint of z_k is 2 lambda d/dz_k in this weighted space.
  CHECK(max_abs_diff(leading_block(Z.adjoint(), b.interior_size(1)), leading_block(2 * lam * Dz, b.interior_size(1))) < 1e-13);
  Poly f = Poly::monomial({1, 2}, 2.0) + Poly::monomial({0, 0}, cplx(0, 1));
  CHECK(fock_polynomial(fock_coefficients(f, b), b).max_coeff_diff(f) < 1e-14);
  CHECK(fock_norm_sq({2, 1}, 0.5) == 2.0);
  OperatorMatrix A(b, Z), B(b, Dz);
  CHECK_NOTHROW(A * B);
  OperatorMatrix C(Basis(BasisKind::Hermite, 2, 6, lam), Z);
  CHECK_THROWS_AS(A * C, DimensionError);
}
