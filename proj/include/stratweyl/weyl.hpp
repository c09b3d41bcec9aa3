#pragma once

#include "stratweyl/basis.hpp"
#include "stratweyl/diffop.hpp"
#include "stratweyl/heisenberg.hpp"
#include "stratweyl/quadrature.hpp"
#include "stratweyl/types.hpp"

namespace sw {

/// Function on R^{2n} = {(p, q)}: a polynomial in (p_1..p_n, q_1..q_n), optionally times
/// the Gaussian exp(-lambda |p|^2 - |q|^2 / lambda) carried by Wigner functions of
/// Hermite-basis operators.
struct PhaseSymbol {
  int n = 1;
  double lambda = 1.0;
  Poly poly;
  bool gaussian = false;

  PhaseSymbol() = default;
  PhaseSymbol(int n_, double lambda_, Poly p, bool gaussian_ = false);

  cplx evaluate(const RVector& p, const RVector& q) const;
  PhaseSymbol conj() const;
};

/// Moment map Psi_lambda(p, q) = q.X* - lambda p.Y* + lambda Z*.
HeisCoadjPoint psi_lambda(const RVector& p, const RVector& q, double lambda);

/// Heisenberg action on phase space, g.(p, q) = (p + a, q + lambda b).
void h_act_phase(const HeisElement& g, RVector& p, RVector& q, double lambda);

/// W0(p^a q^b) = (i d/ds)^b ((x + s/2)^a phi(x + s)) at s = 0, extended linearly; the
/// result is already normal ordered.
DiffOp weyl_quantize_poly(const Poly& f);

/// Same operator through the symmetrized product of x and i d over all orderings.
DiffOp weyl_quantize_symmetrized(const Poly& f);

/// Exact Weyl symbol of a polynomial differential operator (inverse of weyl_quantize_poly).
Poly wigner_dequantize(const DiffOp& d);

/// Exact Wigner function of |h_a><h_b| as a Gaussian-type phase symbol. Uses monomial
/// expansions of the Hermite functions, so intended for low indices (|a|, |b| <= 16).
PhaseSymbol wigner_rank_one(const MultiIndex& a, const MultiIndex& b, double lambda);

/// Exact Wigner function of a Hermite-basis matrix supported on indices of degree <= max_index.
PhaseSymbol wigner_exact(const CMatrix& a, const Basis& basis, int max_index);

/// Table T(j, l) = int h_j(p - s/2) h_l(p + s/2) e^{-isq} ds, j, l <= kmax, by
/// Gauss-Hermite quadrature in s with `rule`.
CMatrix wigner_table_1d(int kmax, double lambda, double p, double q, const QuadratureRule& rule);

/// Pointwise Wigner transform of operators on L^2(R^n) (x) V given by their Hermite-basis
/// matrix; values are End(V) matrices (1 x 1 for scalars).
class WignerEvaluator {
 public:
  WignerEvaluator(OperatorMatrix a, int quad_order);

  CMatrix value(const RVector& p, const RVector& q) const;
  cplx scalar_value(const RVector& p, const RVector& q) const;

  const OperatorMatrix& op() const { return a_; }

 private:
  OperatorMatrix a_;
  QuadratureRule rule_;
};

/// Block quantization of an End(V)-valued polynomial symbol f = sum_{uv} f_uv E_uv:
/// returns sum_{uv} W0(f_uv) (x) E_uv on the truncated Hermite basis.
OperatorMatrix weyl_quantize_opvalued(const std::vector<std::vector<Poly>>& f, const Basis& basis);

}  // namespace sw
