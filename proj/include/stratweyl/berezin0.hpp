#pragma once

#include <functional>

#include "stratweyl/basis.hpp"
#include "stratweyl/diffop.hpp"
#include "stratweyl/heisenberg.hpp"
#include "stratweyl/weyl.hpp"

namespace sw {

/// Polynomial sum c_{ab} z^a conj(z)^b on C^n, stored as a Poly in 2n variables
/// (z_1..z_n, conj z_1..conj z_n).
struct PolySymbol {
  int n = 1;
  Poly poly;

  PolySymbol() = default;
  PolySymbol(int n_, Poly p);

  cplx evaluate(const CVector& z) const;
  PolySymbol conj() const;
  static PolySymbol constant(int n, cplx c);
  /// z_k conj(z)_k summed with weights; convenient for tests.
  static PolySymbol z_zbar(int n, int k);
};

/// P(z, conj z) exp(-rate |z|^2) with rate >= 0.
struct GaussPolySymbol {
  PolySymbol poly;
  double rate = 0.0;

  GaussPolySymbol() = default;
  GaussPolySymbol(PolySymbol p, double rate_);

  int n() const { return poly.n; }
  cplx evaluate(const CVector& z) const;
  GaussPolySymbol conj() const { return {poly.conj(), rate}; }
};

/// Largest coefficient difference; requires equal rates.
double max_coeff_diff(const GaussPolySymbol& a, const GaussPolySymbol& b);

/// Exact Berezin symbol <A e_z, e_z> / <e_z, e_z> of a truncated Fock matrix, as
/// P(z, conj z) exp(-|z|^2 / 2 lambda).
GaussPolySymbol berezin_symbol0(const OperatorMatrix& a);

/// Exact Berezin symbol of a polynomial differential operator on holomorphic functions:
/// z^a d^b -> z^a conj(z)^b / (2 lambda)^{|b|}.
PolySymbol berezin_symbol0(const DiffOp& d, double lambda);

/// Pointwise <A e_z, e_z> / <e_z, e_z> with truncated coherent states (contraction route).
cplx berezin_symbol0_at(const OperatorMatrix& a, const CVector& z);

/// Adjoint of the Berezin symbol map, S0^* f = int f |e_z><e_z| e^{-|z|^2 / 2 lambda} dmu_lambda,
/// from exact Gaussian moments of P(z, conj z) exp(-rate |z|^2).
OperatorMatrix berezin_adjoint0(const GaussPolySymbol& f, const Basis& basis);

/// Phi_lambda(z) = Re z . X* + Im z . Y* + lambda Z*.
HeisCoadjPoint phi_lambda(const CVector& z, double lambda);

/// exp(t Delta) with Delta = 4 sum d^2 / dz_k d conj z_k, in closed form. For rate > 0 only
/// t > -1 / (4 rate) is accepted and t < 0 is rejected (backward heat on Gaussians).
GaussPolySymbol heat_flow(const GaussPolySymbol& f, double t);
PolySymbol heat_flow(const PolySymbol& f, double t);

/// B0 = exp(lambda Delta / 2).
PolySymbol berezin_transform0(const PolySymbol& f, double lambda);
GaussPolySymbol berezin_transform0(const GaussPolySymbol& f, double lambda);

/// Integral form int f(w) exp(-|z - w|^2 / 2 lambda) d mu_lambda(w) by tensor Gauss-Hermite
/// quadrature; `f_rate` is the Gaussian rate of f (0 for polynomials).
cplx berezin_transform0_integral(const std::function<cplx(const CVector&)>& f, double f_rate, const CVector& z,
                                 double lambda, int quad_order);

/// exp(-lambda Delta / 4) on polynomial symbols (finite series).
PolySymbol half_heat_inverse(const PolySymbol& f, double lambda);

/// J^{-1}: a phase-space symbol f(p, q) as a function of z through p = -Im z / lambda,
/// q = Re z. Gaussian-type symbols become P exp(-|z|^2 / lambda).
GaussPolySymbol phase_to_fock_symbol(const PhaseSymbol& f);
/// J: F(z) -> F(q - i lambda p) for polynomial symbols.
PhaseSymbol fock_to_phase_symbol(const PolySymbol& f, double lambda);

/// U0 of a Fock-side polynomial differential operator: W0^{-1}(B0^{-1} D B0) pulled back by J^{-1}.
PolySymbol u0_via_weyl(const DiffOp& d, double lambda);

/// U0 of a Fock matrix supported on indices of degree <= max_index, as an exact
/// Gaussian-type symbol; B0^{-1} A B0 uses the supplied B0 matrix.
GaussPolySymbol u0_via_weyl(const OperatorMatrix& a, const CMatrix& b0, int max_index);

/// Pointwise U0(A)(z) for a general Fock matrix through Wigner quadrature tables.
cplx u0_at(const OperatorMatrix& a, const CMatrix& b0, const CVector& z, int quad_order);

}  // namespace sw
