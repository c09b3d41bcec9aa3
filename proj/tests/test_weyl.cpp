#include <cmath>
#include <random>

#include "doctest.h"
#include "stratweyl/heisenberg.hpp"
#include "stratweyl/hermite.hpp"
#include "stratweyl/linalg.hpp"
#include "stratweyl/weyl.hpp"
#include "test_util.hpp"

using namespace sw;

namespace {

Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
  Poly p(nvars);
  std::uniform_int_distribution<int> di(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    MultiIndex e(nvars, 0);
    int budget = di(rng);
    for (int k = 0; k < nvars && budget > 0; ++k) {
      const int v = std::uniform_int_distribution<int>(0, budget)(rng);
      e[k] = v;
      budget -= v;
    }
    p.add_term(e, cplx(swtest::uniform(rng, -1, 1), swtest::uniform(rng, -1, 1)));
  }
  return p;
}

}  // namespace

TEST_CASE("basic quantizations") {
  CHECK(weyl_quantize_poly(Poly::constant(2, 1.0)).max_coeff_diff(DiffOp::identity(1)) == 0.0);
  CHECK(weyl_quantize_poly(Poly::variable(2, 0)).max_coeff_diff(DiffOp::mult(1, 0)) == 0.0);
  CHECK(weyl_quantize_poly(Poly::variable(2, 1)).max_coeff_diff(DiffOp::deriv(1, 0, I)) == 0.0);
  const DiffOp x = DiffOp::mult(1, 0), q = DiffOp::deriv(1, 0, I);
  const DiffOp sym = 0.5 * (x * q + q * x);
  CHECK(weyl_quantize_poly(Poly::monomial({1, 1})).max_coeff_diff(sym) < 1e-15);
  // Matrix form on the interior block against the product of ladder matrices.
  const Basis b(BasisKind::Hermite, 1, 20, 1.4);
  CMatrix X = materialize(x, b).m, Q = materialize(q, b).m;
  CMatrix lhs = materialize(weyl_quantize_poly(Poly::monomial({1, 1})), b).m;
  const int inner = b.interior_size(kLadderMargin);
  CHECK(max_abs_diff(leading_block(lhs, inner), leading_block(0.5 * (X * Q + Q * X), inner)) < 1e-12);
}

TEST_CASE("two quantization paths agree on polynomials of degree <= 6") {
  std::mt19937_64 rng(1);
  for (int n : {1, 2}) {
    for (int t = 0; t < 10; ++t) {
      Poly f = random_poly(rng, 2 * n, 6, 6);
      const DiffOp a = weyl_quantize_poly(f), b = weyl_quantize_symmetrized(f);
      CHECK(a.max_coeff_diff(b) < 1e-12);
      CHECK(wigner_dequantize(a).max_coeff_diff(f) < 1e-12);
    }
  }
}

TEST_CASE("moment map of the Schrodinger model") {
  for (int n : {1, 2}) {
    const double lam = 1.7;
    for (const auto& X : HeisAlgElement::basis(n)) {
      const Poly sym = wigner_dequantize(dsigma0_op(X, lam));
      // i <Psi(p, q), X> = i (q.a - lambda p.b + lambda c)
      Poly expect = Poly::constant(2 * n, I * lam * X.c);
      for (int k = 0; k < n; ++k) {
        expect += Poly::variable(2 * n, n + k, I * X.a[k]);
        expect += Poly::variable(2 * n, k, -I * lam * X.b[k]);
      }
      CHECK(sym.max_coeff_diff(expect) <= 1e-12);
    }
  }
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    RVector p = RVector::Random(2), q = RVector::Random(2);
    HeisElement g{RVector::Random(2), RVector::Random(2), 0.3};
    const double lam = 0.8;
    auto before = h_coadjoint(g, psi_lambda(p, q, lam));
    h_act_phase(g, p, q, lam);
    auto after = psi_lambda(p, q, lam);
    CHECK((before.alpha - after.alpha).norm() < 1e-14);
    CHECK((before.beta - after.beta).norm() < 1e-14);
  }
  auto z = psi_lambda(RVector::Zero(1), RVector::Zero(1), 2.0);
  CHECK(z.gamma == 2.0);
  CHECK(z.alpha.norm() == 0.0);
}

TEST_CASE("Wigner tables: exact polynomial vs quadrature vs trapezoid oracle") {
  const double lam = 1.0;
  // Gaussian of the ground state.
  auto w00 = wigner_rank_one({0}, {0}, lam);
  CHECK(std::abs(w00.evaluate(RVector::Zero(1), RVector::Zero(1)) - 2.0) < 1e-14);
  const auto rule = gauss_hermite(80);
  for (double lam2 : {1.0, 0.6}) {
    for (auto [p, q] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.4, -1.1}, {-1.3, 2.0}, {2.0, 3.5}}) {
      CMatrix t = wigner_table_1d(10, lam2, p, q, rule);
      for (int j = 0; j <= 10; j += 3)
        for (int l = 0; l <= 10; l += 2) {
          const cplx ex = wigner_rank_one({j}, {l}, lam2).evaluate(RVector::Constant(1, p), RVector::Constant(1, q));
          CHECK(std::abs(t(j, l) - ex) < 1e-10);
          // Trapezoid on a wide interval (spectrally accurate for smooth decaying integrands).
          const double L = 24.0 / std::sqrt(lam2);
          const int M = 4000;
          cplx s = 0.0;
          for (int m = 0; m <= M; ++m) {
            const double ss = -L + 2 * L * m / M;
            s += hermite_fn(j, lam2, p - ss / 2) * hermite_fn(l, lam2, p + ss / 2) * std::exp(-I * ss * q);
          }
          s *= 2 * L / M;
          CHECK(std::abs(t(j, l) - s) < 1e-10);
        }
    }
  }
}

TEST_CASE("scalar traciality of rank-one Hermite operators") {
  // (2 pi)^{-1} int W(|h_a><h_b|) W(|h_c><h_d|) dp dq = delta_bc delta_ad
  const double lam = 1.0;
  const int K = 8;
  auto rp = gaussian_adapted(40, 2 * lam, 0.0), rq = gaussian_adapted(40, 2 / lam, 0.0);
  auto rule = gauss_hermite(100);
  std::vector<CMatrix> tabs;
  std::vector<double> wts;
  for (int i = 0; i < rp.order(); ++i)
    for (int j = 0; j < rq.order(); ++j) {
      tabs.push_back(wigner_table_1d(K, lam, rp.nodes[i], rq.nodes[j], rule));
      wts.push_back(rp.weights[i] * rq.weights[j] / (2 * kPi));
    }
  double worst = 0.0;
  for (int a = 0; a <= K; ++a)
    for (int b = 0; b <= K; ++b)
      for (int c = 0; c <= K; ++c)
        for (int d = 0; d <= K; ++d) {
          cplx s = 0.0;
          for (std::size_t m = 0; m < tabs.size(); ++m) s += wts[m] * tabs[m](a, b) * tabs[m](c, d);
          worst = std::max(worst, std::abs(s - ((b == c && a == d) ? 1.0 : 0.0)));
        }
  CHECK(worst <= 1e-5);
  CHECK(worst <= 1e-10);
}

TEST_CASE("Wigner evaluator: reality and covariance") {
  const double lam = 1.0;
  const int N = 24;
  const Basis b(BasisKind::Hermite, 1, N, lam);
  std::mt19937_64 rng(3);
  CMatrix A = CMatrix::Zero(N + 1, N + 1);
  A.topLeftCorner(5, 5) = swtest::random_matrix(rng, 5, 5);
  WignerEvaluator w(OperatorMatrix(b, A), 60), wa(OperatorMatrix(b, A.adjoint()), 60);
  const PhaseSymbol ex = wigner_exact(A, b, 4);
  for (int t = 0; t < 10; ++t) {
    RVector p = RVector::Constant(1, swtest::uniform(rng, -1.5, 1.5)), q = RVector::Constant(1, swtest::uniform(rng, -1.5, 1.5));
    CHECK(std::abs(wa.scalar_value(p, q) - std::conj(w.scalar_value(p, q))) < 1e-12);
    CHECK(std::abs(w.scalar_value(p, q) - ex.evaluate(p, q)) < 1e-10);
    CHECK(std::abs(ex.conj().evaluate(p, q) - std::conj(ex.evaluate(p, q))) < 1e-14);
  }
  for (int t = 0; t < 5; ++t) {
    HeisElement g{RVector::Constant(1, swtest::uniform(rng, -0.5, 0.5)), RVector::Constant(1, swtest::uniform(rng, -0.5, 0.5)),
                  swtest::uniform(rng, -1, 1)};
    CMatrix S = sigma0_matrix(g, N, lam, 60).m;
    WignerEvaluator wg(OperatorMatrix(b, S * A * S.adjoint()), 60);
    for (int s = 0; s < 5; ++s) {
      RVector p = RVector::Constant(1, swtest::uniform(rng, -1.5, 1.5)), q = RVector::Constant(1, swtest::uniform(rng, -1.5, 1.5));
      RVector p0 = p, q0 = q;
      h_act_phase(h_inverse(g), p0, q0, lam);
      CHECK(std::abs(wg.scalar_value(p, q) - w.scalar_value(p0, q0)) < 1e-6);
    }
  }
}

TEST_CASE("operator-valued quantization") {
  const Basis b(BasisKind::Hermite, 1, 10, 1.0, 2);
  std::vector<std::vector<Poly>> f(2, std::vector<Poly>(2, Poly(2)));
  f[0][0] = Poly::constant(2, 1.0);
  f[1][1] = Poly::constant(2, 1.0);
  CHECK(max_abs_diff(weyl_quantize_opvalued(f, b).m, CMatrix::Identity(b.size(), b.size())) == 0.0);
  f[0][1] = Poly::variable(2, 0);
  auto W = weyl_quantize_opvalued(f, b);
  CMatrix X = materialize(DiffOp::mult(1, 0), b.scalar()).m;
  CMatrix e01 = CMatrix::Zero(2, 2);
  e01(0, 1) = 1.0;
  CHECK(max_abs_diff(W.m, CMatrix::Identity(b.size(), b.size()) + kron(X, e01)) < 1e-15);
  CHECK_THROWS_AS(weyl_quantize_opvalued(f, b.with_v(3)), DimensionError);
}
