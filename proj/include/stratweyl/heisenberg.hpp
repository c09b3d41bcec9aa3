#pragma once

#include "stratweyl/basis.hpp"
#include "stratweyl/diffop.hpp"
#include "stratweyl/types.hpp"

namespace sw {

/// Group element [a, b, c]; product [a,b,c][a',b',c'] = [a+a', b+b', c+c'+(a.b' - b.a')/2].
struct HeisElement {
  RVector a, b;
  double c = 0.0;

  int n() const { return static_cast<int>(a.size()); }
  static HeisElement identity(int n);
  /// Complex coordinate z0 = a + i b used by the Fock-side formulas.
  CVector z0() const;
};

/// Lie algebra element a.X + b.Y + c Z.
struct HeisAlgElement {
  RVector a, b;
  double c = 0.0;

  int n() const { return static_cast<int>(a.size()); }
  static HeisAlgElement X(int n, int k);
  static HeisAlgElement Y(int n, int k);
  static HeisAlgElement Z(int n);
  /// The 2n+1 basis elements X_1..X_n, Y_1..Y_n, Z.
  static std::vector<HeisAlgElement> basis(int n);
};

/// Linear functional alpha.X* + beta.Y* + gamma Z*.
struct HeisCoadjPoint {
  RVector alpha, beta;
  double gamma = 0.0;
};

HeisElement h_mul(const HeisElement& g, const HeisElement& h);
HeisElement h_inverse(const HeisElement& g);
/// exp: coordinates of the algebra and the group coincide.
HeisElement h_exp(const HeisAlgElement& X);
HeisAlgElement h_bracket(const HeisAlgElement& X, const HeisAlgElement& Y);
double h_pairing(const HeisCoadjPoint& xi, const HeisAlgElement& X);
HeisCoadjPoint h_coadjoint(const HeisElement& g, const HeisCoadjPoint& xi);

/// Affine action on C^n compatible with the Fock model: g.z = z + lambda (b - i a).
CVector h_act_fock(const HeisElement& g, const CVector& z, double lambda);

/// Schrodinger differential dsigma0(X) = -a.d - i lambda b.x + i lambda c.
DiffOp dsigma0_op(const HeisAlgElement& X, double lambda);
/// Fock differential dpi0(X) = (1/2)(b + i a).z + i lambda (a + i b).d + i lambda c.
DiffOp dpi0_op(const HeisAlgElement& X, double lambda);

/// Entries <sigma0(g) h_beta, h_alpha> by Gauss-Hermite quadrature centred at a/2.
/// Throws NumericError when `quad_order` < min_quadrature_order(N).
OperatorMatrix sigma0_matrix(const HeisElement& g, int N, double lambda, int quad_order);
OperatorMatrix dsigma0_matrix(const HeisAlgElement& X, int N, double lambda);

/// Exact entries of pi0(g) from the Taylor coefficients of
/// alpha(g^{-1}, z) e_beta(g^{-1}.z).
OperatorMatrix pi0_matrix(const HeisElement& g, int N, double lambda);
OperatorMatrix dpi0_matrix(const HeisAlgElement& X, int N, double lambda);

}  // namespace sw
