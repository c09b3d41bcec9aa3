#pragma once

#include "stratweyl/diffop.hpp"
#include "stratweyl/multi_index.hpp"
#include "stratweyl/types.hpp"

namespace sw {

enum class BasisKind {
  Hermite,  // products of Hermite functions h_a(x) on L^2(R^n)
  Fock,     // orthonormal monomials e_a(z) = z^a / sqrt((2 lambda)^{|a|} a!)
};

/// Truncated orthonormal basis, optionally tensored with a finite-dimensional space V
/// (index = scalar_index * dim_v + v).
struct Basis {
  BasisKind kind = BasisKind::Hermite;
  int n = 1;
  int max_degree = 0;
  double lambda = 1.0;
  int dim_v = 1;

  Basis() = default;
  Basis(BasisKind k, int n_, int N, double lambda_, int dim_v_ = 1);

  const MultiIndexSet& indices() const { return set_; }
  int scalar_size() const { return set_.size(); }
  int size() const { return set_.size() * dim_v; }
  /// Number of scalar basis functions of degree <= max_degree - margin.
  int interior_size(int margin) const { return set_.prefix_size(max_degree - margin); }

  Basis scalar() const { return Basis(kind, n, max_degree, lambda, 1); }
  Basis with_v(int dv) const { return Basis(kind, n, max_degree, lambda, dv); }
  Basis with_kind(BasisKind k) const { return Basis(k, n, max_degree, lambda, dim_v); }

  bool same_as(const Basis& o) const;

 private:
  MultiIndexSet set_;
};

/// Dense matrix of an operator in a declared basis (rows and columns share it).
struct OperatorMatrix {
  Basis basis;
  CMatrix m;

  OperatorMatrix() = default;
  OperatorMatrix(Basis b, CMatrix mat);

  OperatorMatrix adjoint() const { return {basis, m.adjoint()}; }
  /// Sub-block on the scalar indices of degree <= N - margin (all V components kept).
  CMatrix interior(int margin) const;
};

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);

/// Squared norm (2 lambda)^{|a|} a! of z^a in the Gaussian-weighted Fock space.
double fock_norm_sq(const MultiIndex& alpha, double lambda);

/// Exact compression P Op P of a polynomial differential operator (M = x, D = d/dx) onto
/// the truncated Hermite basis. Intermediate ladder steps run in an enlarged basis so
/// that no entry suffers truncation.
CMatrix materialize_hermite(const DiffOp& op, const Basis& basis);

/// Exact compression of a polynomial differential operator (M = z, D = d/dz) onto the
/// truncated Fock basis.
CMatrix materialize_fock(const DiffOp& op, const Basis& basis);

/// Dispatches on basis.kind; for dim_v > 1 the result is op (x) I_V.
OperatorMatrix materialize(const DiffOp& op, const Basis& basis);

/// Matrix with entries prod_k tables[k](alpha_k, beta_k) on the scalar basis; tables must
/// cover indices 0..max_degree.
CMatrix separable_matrix(const std::vector<CMatrix>& tables, const Basis& basis);

/// Interior margins: polynomial differential operators leak by their degree, so their
/// products are exact below N - 4; displaced (group) operators have tails decaying like a
/// Poisson distribution and need a wider margin for 1e-6 agreement at |a|, |b| <= 1.
inline constexpr int kLadderMargin = 4;
inline constexpr int kGroupMargin = 16;

/// Minimal Gauss-Hermite order accepted for matrices of truncation degree N.
inline int min_quadrature_order(int N) { return N + 16; }

/// Coefficient vector of a holomorphic polynomial in the orthonormal Fock basis.
CVector fock_coefficients(const Poly& f, const Basis& basis);

/// Holomorphic polynomial with the given orthonormal Fock coefficients.
Poly fock_polynomial(const CVector& coeffs, const Basis& basis);

}  // namespace sw
