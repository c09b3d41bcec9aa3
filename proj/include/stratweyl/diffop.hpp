#pragma once

#include "stratweyl/poly.hpp"

namespace sw {

/// Polynomial differential operator in n variables, stored in normal order
///   sum c_{ab} M^a D^b,
/// where M_k multiplies by the k-th coordinate and D_k differentiates in it
/// ([D_k, M_l] = delta_kl). The same algebra serves the Schrodinger side (M = x, D = d/dx)
/// and the Fock side (M = z, D = d/dz).
class DiffOp {
 public:
  explicit DiffOp(int n = 1) : n_(n), coeffs_(2 * n) {}

  static DiffOp identity(int n, cplx c = 1.0);
  /// c * M^a D^b
  static DiffOp term(const MultiIndex& mult, const MultiIndex& deriv, cplx c = 1.0);
  static DiffOp mult(int n, int k, cplx c = 1.0);
  static DiffOp deriv(int n, int k, cplx c = 1.0);

  int n() const { return n_; }
  /// Exponents are (a_1..a_n, b_1..b_n).
  const Poly& coefficients() const { return coeffs_; }
  int order() const;   // highest total derivative order
  int degree() const;  // highest total |a| + |b|

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(cplx c);

  /// Composition (this after o), re-normal-ordered.
  DiffOp compose(const DiffOp& o) const;

  /// Action on a polynomial in the n coordinates.
  Poly apply(const Poly& f) const;

  double max_coeff_diff(const DiffOp& o) const { return coeffs_.max_coeff_diff(o.coeffs_); }

 private:
  int n_;
  Poly coeffs_;
};

DiffOp operator+(DiffOp a, const DiffOp& b);
DiffOp operator-(DiffOp a, const DiffOp& b);
DiffOp operator*(const DiffOp& a, const DiffOp& b);
DiffOp operator*(cplx c, DiffOp a);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// Splits a combined exponent (a, b) of length 2n into its halves.
std::pair<MultiIndex, MultiIndex> split_exponent(const MultiIndex& e);

}  // namespace sw
