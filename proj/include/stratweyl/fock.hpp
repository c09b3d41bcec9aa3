#pragma once

#include "stratweyl/basis.hpp"
#include "stratweyl/diffop.hpp"
#include "stratweyl/types.hpp"

namespace sw {

/// Element of the truncated Fock space, coefficients against e_a = z^a / sqrt((2 lambda)^{|a|} a!).
struct FockVector {
  Basis basis;
  CVector coeffs;

  FockVector() = default;
  FockVector(Basis b, CVector c);

  cplx evaluate(const CVector& z) const;
  double norm() const { return coeffs.norm(); }
};

/// Element of the truncated L^2(R^n), coefficients against products of Hermite functions.
struct SchrodingerVector {
  Basis basis;
  CVector coeffs;

  SchrodingerVector() = default;
  SchrodingerVector(Basis b, CVector c);

  cplx evaluate(const RVector& x) const;
  double norm() const { return coeffs.norm(); }
};

/// <F, G> = sum F_a conj(G_a), linear in the first slot.
cplx fock_inner(const FockVector& f, const FockVector& g);

/// The same inner product as the Gaussian-weighted integral over C^n, by tensor quadrature.
cplx fock_inner_quadrature(const FockVector& f, const FockVector& g, int quad_order);

/// Truncation of e_z(w) = exp(conj(z) w / 2 lambda).
FockVector coherent_state(const CVector& z, int N, double lambda);

/// True when |z|^2 / 2 lambda > N / 3, where the truncated coherent state loses accuracy.
bool coherent_truncation_warning(const CVector& z, int N, double lambda);

/// Matrix of B0 from the Hermite basis (columns) to the Fock basis (rows). Moments of the
/// Hermite functions are taken by quadrature in x, the z-series is expanded exactly.
CMatrix segal_bargmann_matrix(int n, int N, double lambda, int quad_order);

/// B0^{-1} = B0^*.
CMatrix segal_bargmann_inverse_matrix(int n, int N, double lambda, int quad_order);

/// Diagonal of the B0 matrix (its off-diagonal part vanishes up to quadrature error).
CVector segal_bargmann_phases(int n, int N, double lambda, int quad_order);

/// B A B^{-1} for an operator given in the Hermite basis (V factors carried along).
OperatorMatrix to_fock(const OperatorMatrix& a, const CMatrix& b0);
/// B^{-1} A B for an operator given in the Fock basis.
OperatorMatrix to_schrodinger(const OperatorMatrix& a, const CMatrix& b0);

/// Exact conjugation of polynomial differential operators: B0^{-1} D B0 for D acting on
/// holomorphic polynomials (z -> i d - i lambda x, d/dz -> (i/2)(x + d / lambda)).
DiffOp fock_to_schrodinger(const DiffOp& d, double lambda);
/// Inverse substitution (x -> -i d/dz + i z / 2 lambda, d -> -i lambda d/dz - i z / 2).
DiffOp schrodinger_to_fock(const DiffOp& d, double lambda);

}  // namespace sw
