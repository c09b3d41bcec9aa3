#include "stratweyl/heisenberg.hpp"

#include <cmath>

#include "stratweyl/hermite.hpp"
#include "stratweyl/quadrature.hpp"

namespace sw {

namespace {

void check_same_n(int n1, int n2) {
  if (n1 != n2) throw DimensionError("Heisenberg: dimension mismatch");
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0)) throw DimensionError("Heisenberg: lambda must be positive");
}

}  // namespace

HeisElement HeisElement::identity(int n) { return {RVector::Zero(n), RVector::Zero(n), 0.0}; }

CVector HeisElement::z0() const {
  CVector z(n());
  for (int k = 0; k < n(); ++k) z[k] = cplx(a[k], b[k]);
  return z;
}

HeisAlgElement HeisAlgElement::X(int n, int k) {
  HeisAlgElement e{RVector::Zero(n), RVector::Zero(n), 0.0};
  e.a[k] = 1.0;
  return e;
}

HeisAlgElement HeisAlgElement::Y(int n, int k) {
  HeisAlgElement e{RVector::Zero(n), RVector::Zero(n), 0.0};
  e.b[k] = 1.0;
  return e;
}

HeisAlgElement HeisAlgElement::Z(int n) { return {RVector::Zero(n), RVector::Zero(n), 1.0}; }

std::vector<HeisAlgElement> HeisAlgElement::basis(int n) {
  std::vector<HeisAlgElement> out;
  for (int k = 0; k < n; ++k) out.push_back(X(n, k));
  for (int k = 0; k < n; ++k) out.push_back(Y(n, k));
  out.push_back(Z(n));
  return out;
}

HeisElement h_mul(const HeisElement& g, const HeisElement& h) {
  check_same_n(g.n(), h.n());
  return {g.a + h.a, g.b + h.b, g.c + h.c + 0.5 * (g.a.dot(h.b) - g.b.dot(h.a))};
}

HeisElement h_inverse(const HeisElement& g) { return {-g.a, -g.b, -g.c}; }

HeisElement h_exp(const HeisAlgElement& X) { return {X.a, X.b, X.c}; }

HeisAlgElement h_bracket(const HeisAlgElement& X, const HeisAlgElement& Y) {
  check_same_n(X.n(), Y.n());
  const int n = X.n();
  return {RVector::Zero(n), RVector::Zero(n), X.a.dot(Y.b) - X.b.dot(Y.a)};
}

double h_pairing(const HeisCoadjPoint& xi, const HeisAlgElement& X) {
  check_same_n(static_cast<int>(xi.alpha.size()), X.n());
  return xi.alpha.dot(X.a) + xi.beta.dot(X.b) + xi.gamma * X.c;
}

HeisCoadjPoint h_coadjoint(const HeisElement& g, const HeisCoadjPoint& xi) {
  check_same_n(static_cast<int>(xi.alpha.size()), g.n());
  return {xi.alpha + xi.gamma * g.b, xi.beta - xi.gamma * g.a, xi.gamma};
}

CVector h_act_fock(const HeisElement& g, const CVector& z, double lambda) {
  check_same_n(static_cast<int>(z.size()), g.n());
  CVector out = z;
  for (int k = 0; k < g.n(); ++k) out[k] += lambda * cplx(g.b[k], -g.a[k]);
  return out;
}

DiffOp dsigma0_op(const HeisAlgElement& X, double lambda) {
  check_lambda(lambda);
  const int n = X.n();
  DiffOp d = DiffOp::identity(n, I * lambda * X.c);
  for (int k = 0; k < n; ++k) {
    if (X.a[k] != 0.0) d += DiffOp::deriv(n, k, -X.a[k]);
    if (X.b[k] != 0.0) d += DiffOp::mult(n, k, -I * lambda * X.b[k]);
  }
  return d;
}

DiffOp dpi0_op(const HeisAlgElement& X, double lambda) {
  check_lambda(lambda);
  const int n = X.n();
  DiffOp d = DiffOp::identity(n, I * lambda * X.c);
  for (int k = 0; k < n; ++k) {
    const cplx m = 0.5 * cplx(X.b[k], X.a[k]);
    const cplx dd = I * lambda * cplx(X.a[k], X.b[k]);
    if (m != cplx(0.0)) d += DiffOp::mult(n, k, m);
    if (dd != cplx(0.0)) d += DiffOp::deriv(n, k, dd);
  }
  return d;
}

OperatorMatrix sigma0_matrix(const HeisElement& g, int N, double lambda, int quad_order) {
  check_lambda(lambda);
  if (quad_order < min_quadrature_order(N)) {
    throw NumericError("sigma0_matrix: quadrature order below N + 16");
  }
  const Basis basis(BasisKind::Hermite, g.n(), N, lambda);
  const double sl = std::sqrt(lambda);
  std::vector<CMatrix> tables;
  for (int k = 0; k < g.n(); ++k) {
    // int h_j(x) e^{-i lambda b x} h_l(x - a) dx; the Gaussians combine to
    // e^{-lambda (x - a/2)^2 - lambda a^2 / 4}.
    const double a = g.a[k], b = g.b[k];
    const QuadratureRule r = gauss_hermite(quad_order);
    CMatrix t = CMatrix::Zero(N + 1, N + 1);
    const double pref = std::exp(-lambda * a * a / 4.0) / sl;
    for (int i = 0; i < r.order(); ++i) {
      const double x = a / 2.0 + r.nodes[i] / sl;
      const auto p = hermite_poly_table(N, lambda, x);
      const auto q = hermite_poly_table(N, lambda, x - a);
      const cplx w = r.weights[i] * pref * std::exp(-I * lambda * b * x);
      for (int j = 0; j <= N; ++j)
        for (int l = 0; l <= N; ++l) t(j, l) += w * p[j] * q[l];
    }
    tables.push_back(std::move(t));
  }
  CMatrix m = separable_matrix(tables, basis);
  m *= std::exp(I * lambda * (g.c + 0.5 * g.a.dot(g.b)));
  return {basis, std::move(m)};
}

OperatorMatrix dsigma0_matrix(const HeisAlgElement& X, int N, double lambda) {
  return materialize(dsigma0_op(X, lambda), Basis(BasisKind::Hermite, X.n(), N, lambda));
}

OperatorMatrix pi0_matrix(const HeisElement& g, int N, double lambda) {
  check_lambda(lambda);
  const Basis basis(BasisKind::Fock, g.n(), N, lambda);
  // pi0(g) F(z) = exp(i lambda c + w.z/2 - lambda |w|^2/4) F(z + delta),
  // w = b + i a, delta = -lambda (b - i a); coefficients factor over coordinates.
  std::vector<CMatrix> tables;
  double w2 = 0.0;
  for (int k = 0; k < g.n(); ++k) {
    const cplx w = cplx(g.b[k], g.a[k]);
    const cplx delta = -lambda * cplx(g.b[k], -g.a[k]);
    w2 += std::norm(w);
    std::vector<cplx> ew(N + 1), dp(N + 1);
    ew[0] = dp[0] = 1.0;
    for (int m = 1; m <= N; ++m) {
      ew[m] = ew[m - 1] * (w / 2.0) / double(m);
      dp[m] = dp[m - 1] * delta;
    }
    CMatrix t = CMatrix::Zero(N + 1, N + 1);
    for (int i = 0; i <= N; ++i)
      for (int l = 0; l <= N; ++l) {
        cplx s = 0.0;
        for (int gam = 0; gam <= std::min(i, l); ++gam) s += binomial(l, gam) * dp[l - gam] * ew[i - gam];
        // orthonormal rescaling sqrt(n_i / n_l) per coordinate
        double scale = std::sqrt(std::pow(2.0 * lambda, i - l) * factorial(i) / factorial(l));
        t(i, l) = s * scale;
      }
    tables.push_back(std::move(t));
  }
  CMatrix m = separable_matrix(tables, basis);
  m *= std::exp(I * lambda * g.c - lambda * w2 / 4.0);
  return {basis, std::move(m)};
}

OperatorMatrix dpi0_matrix(const HeisAlgElement& X, int N, double lambda) {
  return materialize(dpi0_op(X, lambda), Basis(BasisKind::Fock, X.n(), N, lambda));
}

}  // namespace sw
