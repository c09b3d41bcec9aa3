#include "stratweyl/fock.hpp"

#include <cmath>

#include "stratweyl/hermite.hpp"
#include "stratweyl/linalg.hpp"
#include "stratweyl/quadrature.hpp"

namespace sw {

FockVector::FockVector(Basis b, CVector c) : basis(std::move(b)), coeffs(std::move(c)) {
  if (basis.kind != BasisKind::Fock) throw DimensionError("FockVector: basis must be Fock");
  if (coeffs.size() != basis.size()) throw DimensionError("FockVector: size mismatch");
}

cplx FockVector::evaluate(const CVector& z) const {
  if (z.size() != basis.n) throw DimensionError("FockVector::evaluate: point dimension");
  const auto& set = basis.indices();
  cplx s = 0.0;
  for (int i = 0; i < set.size(); ++i) {
    cplx m = coeffs[i] / std::sqrt(fock_norm_sq(set[i], basis.lambda));
    for (int k = 0; k < basis.n; ++k) m *= ipow(z[k], set[i][k]);
    s += m;
  }
  return s;
}

SchrodingerVector::SchrodingerVector(Basis b, CVector c) : basis(std::move(b)), coeffs(std::move(c)) {
  if (basis.kind != BasisKind::Hermite) throw DimensionError("SchrodingerVector: basis must be Hermite");
  if (coeffs.size() != basis.size()) throw DimensionError("SchrodingerVector: size mismatch");
}

cplx SchrodingerVector::evaluate(const RVector& x) const {
  if (x.size() != basis.n) throw DimensionError("SchrodingerVector::evaluate: point dimension");
  std::vector<std::vector<double>> tabs;
  for (int k = 0; k < basis.n; ++k) tabs.push_back(hermite_fn_table(basis.max_degree, basis.lambda, x[k]));
  const auto& set = basis.indices();
  cplx s = 0.0;
  for (int i = 0; i < set.size(); ++i) {
    double h = 1.0;
    for (int k = 0; k < basis.n; ++k) h *= tabs[k][set[i][k]];
    s += coeffs[i] * h;
  }
  return s;
}

cplx fock_inner(const FockVector& f, const FockVector& g) {
  if (!f.basis.same_as(g.basis)) throw DimensionError("fock_inner: basis mismatch");
  return g.coeffs.dot(f.coeffs);
}

cplx fock_inner_quadrature(const FockVector& f, const FockVector& g, int quad_order) {
  if (!f.basis.same_as(g.basis)) throw DimensionError("fock_inner_quadrature: basis mismatch");
  const int n = f.basis.n;
  const double lam = f.basis.lambda;
  auto integrand = [&](const CVector& z) {
    return f.evaluate(z) * std::conj(g.evaluate(z)) * std::exp(-z.squaredNorm() / (2 * lam));
  };
  return integrate_cn(integrand, n, 1.0 / (2 * lam), CVector::Zero(n), quad_order) / std::pow(2 * kPi * lam, n);
}

FockVector coherent_state(const CVector& z, int N, double lambda) {
  Basis b(BasisKind::Fock, static_cast<int>(z.size()), N, lambda);
  const auto& set = b.indices();
  CVector c(set.size());
  for (int i = 0; i < set.size(); ++i) {
    cplx m = 1.0 / std::sqrt(fock_norm_sq(set[i], lambda));
    for (int k = 0; k < b.n; ++k) m *= ipow(std::conj(z[k]), set[i][k]);
    c[i] = m;
  }
  return {b, c};
}

bool coherent_truncation_warning(const CVector& z, int N, double lambda) {
  return z.squaredNorm() / (2 * lambda) > N / 3.0;
}

namespace {

// One-coordinate table T(a, k) = <B0 h_k, e_a>.
CMatrix segal_bargmann_table(int N, double lambda, int quad_order) {
  if (quad_order < min_quadrature_order(N)) throw NumericError("segal_bargmann_matrix: quadrature order below N + 16");
  // Moments M(k, m) = int x^m e^{-lambda x^2 / 2} h_k(x) dx, integrand Gaussian of rate lambda.
  const QuadratureRule r = gauss_hermite(quad_order);
  const double sl = std::sqrt(lambda);
  RMatrix mom = RMatrix::Zero(N + 1, N + 1);
  for (int i = 0; i < r.order(); ++i) {
    const double x = r.nodes[i] / sl;
    const auto h = hermite_poly_table(N, lambda, x);
    double xm = r.weights[i] / sl;
    for (int m = 0; m <= N; ++m) {
      for (int k = 0; k <= N; ++k) mom(k, m) += xm * h[k];
      xm *= x;
    }
  }
  // B0 h_k (z) = (lambda/pi)^{1/4} e^{z^2 / 4 lambda} sum_m (i z)^m / m! M(k, m).
  const double pref = std::pow(lambda / kPi, 0.25);
  CMatrix t = CMatrix::Zero(N + 1, N + 1);
  for (int k = 0; k <= N; ++k)
    for (int a = 0; a <= N; ++a) {
      cplx s = 0.0;
      for (int rr = 0; 2 * rr <= a; ++rr) {
        const int m = a - 2 * rr;
        s += ipow(I, m) / factorial(m) * mom(k, m) * std::pow(1.0 / (4 * lambda), rr) / factorial(rr);
      }
      t(a, k) = pref * s * std::sqrt(std::pow(2 * lambda, a) * factorial(a));
    }
  return t;
}

}  // namespace

CMatrix segal_bargmann_matrix(int n, int N, double lambda, int quad_order) {
  const Basis b(BasisKind::Fock, n, N, lambda);
  const CMatrix t = segal_bargmann_table(N, lambda, quad_order);
  return separable_matrix(std::vector<CMatrix>(n, t), b);
}

CMatrix segal_bargmann_inverse_matrix(int n, int N, double lambda, int quad_order) {
  return segal_bargmann_matrix(n, N, lambda, quad_order).adjoint();
}

CVector segal_bargmann_phases(int n, int N, double lambda, int quad_order) {
  return segal_bargmann_matrix(n, N, lambda, quad_order).diagonal();
}

namespace {

CMatrix lift(const CMatrix& b0, int dim_v) {
  if (dim_v == 1) return b0;
  return kron(b0, CMatrix::Identity(dim_v, dim_v));
}

}  // namespace

OperatorMatrix to_fock(const OperatorMatrix& a, const CMatrix& b0) {
  if (a.basis.kind != BasisKind::Hermite) throw DimensionError("to_fock: operator must be in the Hermite basis");
  const CMatrix b = lift(b0, a.basis.dim_v);
  if (b.rows() != a.m.rows()) throw DimensionError("to_fock: B0 size mismatch");
  return {a.basis.with_kind(BasisKind::Fock), b * a.m * b.adjoint()};
}

OperatorMatrix to_schrodinger(const OperatorMatrix& a, const CMatrix& b0) {
  if (a.basis.kind != BasisKind::Fock) throw DimensionError("to_schrodinger: operator must be in the Fock basis");
  const CMatrix b = lift(b0, a.basis.dim_v);
  if (b.rows() != a.m.rows()) throw DimensionError("to_schrodinger: B0 size mismatch");
  return {a.basis.with_kind(BasisKind::Hermite), b.adjoint() * a.m * b};
}

namespace {

DiffOp substitute(const DiffOp& d, const std::vector<DiffOp>& img_m, const std::vector<DiffOp>& img_d) {
  const int n = d.n();
  DiffOp out(n);
  for (const auto& [e, c] : d.coefficients().terms()) {
    const auto [a, b] = split_exponent(e);
    DiffOp t = DiffOp::identity(n, c);
    for (int k = 0; k < n; ++k)
      for (int r = 0; r < a[k]; ++r) t = t * img_m[k];
    for (int k = 0; k < n; ++k)
      for (int r = 0; r < b[k]; ++r) t = t * img_d[k];
    out += t;
  }
  return out;
}

}  // namespace

DiffOp fock_to_schrodinger(const DiffOp& d, double lambda) {
  const int n = d.n();
  std::vector<DiffOp> m, dd;
  for (int k = 0; k < n; ++k) {
    m.push_back(DiffOp::deriv(n, k, I) + DiffOp::mult(n, k, -I * lambda));
    dd.push_back(DiffOp::mult(n, k, 0.5 * I) + DiffOp::deriv(n, k, 0.5 * I / lambda));
  }
  return substitute(d, m, dd);
}

DiffOp schrodinger_to_fock(const DiffOp& d, double lambda) {
  const int n = d.n();
  std::vector<DiffOp> m, dd;
  for (int k = 0; k < n; ++k) {
    m.push_back(DiffOp::deriv(n, k, -I) + DiffOp::mult(n, k, I / (2 * lambda)));
    dd.push_back(DiffOp::deriv(n, k, -I * lambda) + DiffOp::mult(n, k, -0.5 * I));
  }
  return substitute(d, m, dd);
}

}  // namespace sw
