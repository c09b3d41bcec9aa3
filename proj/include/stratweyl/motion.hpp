#pragma once

#include "stratweyl/basis.hpp"
#include "stratweyl/compactk.hpp"
#include "stratweyl/diffop.hpp"
#include "stratweyl/heisenberg.hpp"

namespace sw {

/// ((z0, conj z0), c0, k) in G = H_n x| K.
struct MotionGroupElement {
  CVector z0;
  double c0 = 0.0;
  CMatrix k;

  int n() const { return static_cast<int>(z0.size()); }
  static MotionGroupElement identity(int n);
  static MotionGroupElement from_heis(const HeisElement& g);
  /// Heisenberg part g0 (a = Re z0, b = Im z0), so that g = g0 k.
  HeisElement heis() const;
};

/// ((a, conj a), c, A) in the Lie algebra of G.
struct MotionAlgElement {
  CVector a;
  double c = 0.0;
  CMatrix A;

  int n() const { return static_cast<int>(a.size()); }
  static MotionAlgElement zero(int n);
  static MotionAlgElement from_heis(const HeisAlgElement& x);
  HeisAlgElement heis() const;
  /// X_1..X_n (a = e_k), Y_1..Y_n (a = i e_k), Z (c = 1), then the basis of k.
  static std::vector<MotionAlgElement> basis(const CompactK& K);
};

/// xi = (u, d, phi) with u = (u1, u2) in C^n x C^n; real points have u2 = conj(u1).
struct CoadjointPoint {
  CVector u1, u2;
  double d = 0.0;
  RVector phi;
};

/// omega((z, w), (z', w')) = (i/2)(z.w' - z'.w).
cplx omega(const CVector& z, const CVector& w, const CVector& zp, const CVector& wp);

/// v x u in k*, <v x u, A> = omega(u, A.v), with A.(z, w) = (Az, -A^t w).
struct CrossProduct {
  CVector v1, v2, u1, u2;
  cplx evaluate(const CMatrix& A) const;
  /// Coordinates against the basis of k (real part; exact for real pairs).
  RVector coords(const CompactK& K) const;
};

MotionGroupElement g_mul(const MotionGroupElement& g, const MotionGroupElement& h);
MotionGroupElement g_inverse(const MotionGroupElement& g);
MotionAlgElement m_bracket(const MotionAlgElement& X, const MotionAlgElement& Y);
cplx m_pairing(const CompactK& K, const CoadjointPoint& xi, const MotionAlgElement& X);
MotionAlgElement g_adjoint(const MotionGroupElement& g, const MotionAlgElement& X);
CoadjointPoint g_coadjoint(const CompactK& K, const MotionGroupElement& g, const CoadjointPoint& xi);

/// For d != 0 an element g with Ad*(g) xi = (0, d, phi').
MotionGroupElement generic_orbit_normalizer(const CoadjointPoint& xi);

/// ((z0, w0), c0, k) in the complexification.
struct ComplexMotionElement {
  CVector z0, w0;
  cplx c0 = 0.0;
  CMatrix k;
  static ComplexMotionElement from_real(const MotionGroupElement& g);
};
ComplexMotionElement gc_mul(const ComplexMotionElement& g, const ComplexMotionElement& h);

/// g = ((zeta, 0), 0, I) ((0, 0), c, k) ((0, eta), 0, I) with c = c0 - (i/4) z0.w0 and
/// eta = k^t w0.
struct PDecomposition {
  CVector zeta;
  cplx c = 0.0;
  CMatrix k;
  CVector eta;
  ComplexMotionElement plus() const;
  ComplexMotionElement middle() const;
  ComplexMotionElement minus() const;
};
PDecomposition p_decompose(const ComplexMotionElement& g);

/// g.Z = z0 + k z on the bounded-symmetric-domain picture p+ = C^n.
CVector domain_action(const MotionGroupElement& g, const CVector& z);
/// The same action after the rescaling z -> i z / lambda, g.z = k z - i lambda z0; this is
/// the action under which the Fock model pi and its symbols are covariant.
CVector fock_action(const MotionGroupElement& g, const CVector& z, double lambda);
/// Section g_Z = ((z, conj z), 0, I).
MotionGroupElement section(const CVector& z);

/// K(Z, W) = e^{lambda z.conj(w) / 2} (times I_V).
cplx kernel_k(const CVector& z, const CVector& w, double lambda);
/// J(g, Z) = exp(i lambda c0 + (lambda/2) conj(z0).(k z) + (lambda/4)|z0|^2) rho(k).
CMatrix j_cocycle(const CompactK& K, const MotionGroupElement& g, const CVector& z, double lambda);

/// d tau(A) = -(A z).d on holomorphic polynomials.
DiffOp dtau_op(const CMatrix& A);
/// Scalar part of d pi(X): d pi0(X0) + d tau(A).
DiffOp dpi_scalar_op(const MotionAlgElement& X, double lambda);
/// (1/2l) sum a_kl d_k d_l + (1/2) sum a_kl (x_k d_l - x_l d_k) - (l/2) x.(A x) + Tr(A)/2.
DiffOp dtau_tilde_op(const CMatrix& A, double lambda);
/// Scalar part of d sigma(X): d sigma0(X0) + d tau~(A).
DiffOp dsigma_scalar_op(const MotionAlgElement& X, double lambda);

/// tau(k) F = F(k^{-1} z), by exact re-expansion of (k^{-1} z)^a.
CMatrix tau_matrix(const CMatrix& k, int n, int N, double lambda);
/// tau~(k) = exp(d tau~(log k)) on the Hermite basis (d tau~ preserves the degree).
CMatrix tau_tilde_matrix(const CompactK& K, const CMatrix& k, int N, double lambda);

/// pi(g) = pi0(g0) tau(k) (x) rho(k).
OperatorMatrix pi_matrix(const CompactK& K, const MotionGroupElement& g, int N, double lambda);
/// Compression of pi(g)f(z) = exp(i l c0 + (i/2) conj(z0).z - (l/4)|z0|^2) rho(k) f(k^{-1}(z + i l z0)),
/// computed by polynomial composition and a truncated exponential series.
OperatorMatrix pi_matrix_direct(const CompactK& K, const MotionGroupElement& g, int N, double lambda);
OperatorMatrix dpi_matrix(const CompactK& K, const MotionAlgElement& X, int N, double lambda);
OperatorMatrix dtau_tilde_matrix(const CMatrix& A, int N, double lambda);

/// sigma(g) = sigma0(g0) tau~(k) (x) rho(k).
OperatorMatrix sigma_matrix(const CompactK& K, const MotionGroupElement& g, int N, double lambda, int quad_order);
/// sigma(g) = B^{-1} pi(g) B with B = B0 (x) I_V.
OperatorMatrix sigma_matrix_conj(const CompactK& K, const MotionGroupElement& g, int N, double lambda, const CMatrix& b0);
OperatorMatrix dsigma_matrix(const CompactK& K, const MotionAlgElement& X, int N, double lambda);

/// S_0(A)(z) = E_z^* A E_z / |e_z|^2 in End(V), with truncated coherent states (the
/// untruncated norm is e^{|z|^2/2 lambda}).
CMatrix presymbol(const OperatorMatrix& A, const CVector& z);
/// S(A)(z, phi) = s(S_0(A)(z))(phi).
cplx big_symbol(const CompactK& K, const OperatorMatrix& A, const CVector& z, const OrbitPoint& p);
/// Phi(z, phi) = (i(-z, conj z), lambda, phi - (1/2 lambda)(z, conj z) x (z, conj z)).
CoadjointPoint big_phi(const CompactK& K, const CVector& z, const RVector& phi, double lambda);

}  // namespace sw
