#include "stratweyl/basis.hpp"

#include <cmath>

#include "stratweyl/linalg.hpp"

namespace sw {

Basis::Basis(BasisKind k, int n_, int N, double lambda_, int dim_v_)
    : kind(k), n(n_), max_degree(N), lambda(lambda_), dim_v(dim_v_), set_(n_, N) {
  if (n_ < 1) throw DimensionError("Basis: n must be positive");
  if (N < 0) throw DimensionError("Basis: truncation degree must be non-negative");
  if (!(lambda_ > 0.0)) throw DimensionError("Basis: lambda must be positive");
  if (dim_v_ < 1) throw DimensionError("Basis: dim V must be positive");
}

bool Basis::same_as(const Basis& o) const {
  return kind == o.kind && n == o.n && max_degree == o.max_degree && lambda == o.lambda &&
         dim_v == o.dim_v;
}

OperatorMatrix::OperatorMatrix(Basis b, CMatrix mat) : basis(std::move(b)), m(std::move(mat)) {
  if (m.rows() != basis.size() || m.cols() != basis.size()) {
    throw DimensionError("OperatorMatrix: matrix size does not match basis");
  }
}

CMatrix OperatorMatrix::interior(int margin) const {
  return leading_block(m, basis.interior_size(margin) * basis.dim_v);
}

namespace {

void require_same(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!a.basis.same_as(b.basis)) throw DimensionError("OperatorMatrix: basis mismatch");
}

}  // namespace

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a, b);
  return {a.basis, a.m * b.m};
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a, b);
  return {a.basis, a.m + b.m};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a, b);
  return {a.basis, a.m - b.m};
}

double fock_norm_sq(const MultiIndex& alpha, double lambda) {
  return std::pow(2.0 * lambda, total_degree(alpha)) * multi_factorial(alpha);
}

CMatrix materialize_hermite(const DiffOp& op, const Basis& basis) {
  const int n = basis.n;
  if (op.n() != n) throw DimensionError("materialize_hermite: dimension mismatch");
  const int ext = basis.max_degree + std::max(op.degree(), 0);
  const MultiIndexSet big(n, ext);
  const int S = big.size();
  // Neighbour tables in the enlarged set.
  std::vector<std::vector<int>> up(n, std::vector<int>(S, -1)), down(n, std::vector<int>(S, -1));
  for (int i = 0; i < S; ++i) {
    MultiIndex a = big[i];
    for (int k = 0; k < n; ++k) {
      a[k] += 1;
      up[k][i] = big.index_of(a);
      a[k] -= 2;
      if (a[k] >= 0) down[k][i] = big.index_of(a);
      a[k] += 1;
    }
  }
  const double lam = basis.lambda;
  const double cx = 1.0 / std::sqrt(2.0 * lam);
  const double cd = std::sqrt(lam / 2.0);
  // x_k h_a = cx (sqrt(a_k+1) h_{a+e_k} + sqrt(a_k) h_{a-e_k})
  // d_k h_a = cd (sqrt(a_k) h_{a-e_k} - sqrt(a_k+1) h_{a+e_k})
  auto ladder = [&](const CVector& v, int k, bool is_mult) {
    CVector out = CVector::Zero(S);
    for (int i = 0; i < S; ++i) {
      if (v[i] == cplx(0.0)) continue;
      const double ak = big[i][k];
      if (up[k][i] >= 0) out[up[k][i]] += v[i] * std::sqrt(ak + 1.0) * (is_mult ? cx : -cd);
      if (down[k][i] >= 0) out[down[k][i]] += v[i] * std::sqrt(ak) * (is_mult ? cx : cd);
    }
    return out;
  };
  const int M = basis.scalar_size();
  CMatrix out = CMatrix::Zero(M, M);
  for (int col = 0; col < M; ++col) {
    CVector acc = CVector::Zero(S);
    for (const auto& [e, c] : op.coefficients().terms()) {
      const auto [a, b] = split_exponent(e);
      CVector v = CVector::Zero(S);
      v[col] = c;
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < b[k]; ++r) v = ladder(v, k, false);
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < a[k]; ++r) v = ladder(v, k, true);
      acc += v;
    }
    out.col(col) = acc.head(M);
  }
  return out;
}

CMatrix materialize_fock(const DiffOp& op, const Basis& basis) {
  if (op.n() != basis.n) throw DimensionError("materialize_fock: dimension mismatch");
  const auto& set = basis.indices();
  const int M = set.size();
  CMatrix out = CMatrix::Zero(M, M);
  for (int col = 0; col < M; ++col) {
    const Poly img = op.apply(Poly::monomial(set[col], 1.0 / std::sqrt(fock_norm_sq(set[col], basis.lambda))));
    for (const auto& [e, c] : img.terms()) {
      const int row = set.index_of(e);
      if (row >= 0) out(row, col) = c * std::sqrt(fock_norm_sq(e, basis.lambda));
    }
  }
  return out;
}

OperatorMatrix materialize(const DiffOp& op, const Basis& basis) {
  CMatrix s = basis.kind == BasisKind::Hermite ? materialize_hermite(op, basis) : materialize_fock(op, basis);
  if (basis.dim_v == 1) return {basis, std::move(s)};
  return {basis, kron(s, CMatrix::Identity(basis.dim_v, basis.dim_v))};
}

CMatrix separable_matrix(const std::vector<CMatrix>& tables, const Basis& basis) {
  if (static_cast<int>(tables.size()) != basis.n) throw DimensionError("separable_matrix: need one table per coordinate");
  for (const auto& t : tables)
    if (t.rows() <= basis.max_degree || t.cols() <= basis.max_degree)
      throw DimensionError("separable_matrix: table too small");
  const auto& set = basis.indices();
  const int M = set.size();
  CMatrix out(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      cplx v = 1.0;
      for (int k = 0; k < basis.n; ++k) v *= tables[k](set[i][k], set[j][k]);
      out(i, j) = v;
    }
  return out;
}

CVector fock_coefficients(const Poly& f, const Basis& basis) {
  if (f.nvars() != basis.n) throw DimensionError("fock_coefficients: dimension mismatch");
  const auto& set = basis.indices();
  CVector v = CVector::Zero(set.size());
  for (const auto& [e, c] : f.terms()) {
    const int i = set.index_of(e);
    if (i < 0) throw DimensionError("fock_coefficients: polynomial degree exceeds truncation");
    v[i] = c * std::sqrt(fock_norm_sq(e, basis.lambda));
  }
  return v;
}

Poly fock_polynomial(const CVector& coeffs, const Basis& basis) {
  const auto& set = basis.indices();
  if (coeffs.size() != set.size()) throw DimensionError("fock_polynomial: size mismatch");
  Poly p(basis.n);
  for (int i = 0; i < set.size(); ++i) p.add_term(set[i], coeffs[i] / std::sqrt(fock_norm_sq(set[i], basis.lambda)));
  return p;
}

}  // namespace sw
