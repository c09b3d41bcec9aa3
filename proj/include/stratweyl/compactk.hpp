#pragma once

#include <random>
#include <vector>

#include "stratweyl/types.hpp"

namespace sw {

enum class KKind {
  Trivial,  // K = {I}; V = C. Reduces every motion-group construction to the Heisenberg group.
  Torus,    // K = U(1)^n (diagonal), rho(diag(e^{i theta})) = e^{i m.theta}
  SU2,      // K = SU(2) in U(2), rho = spin j
};

struct CompactChoice {
  KKind kind = KKind::Trivial;
  int n = 1;
  Eigen::VectorXi m;  // torus weights
  double j = 0.0;     // su2 spin

  static CompactChoice trivial(int n);
  static CompactChoice torus(const Eigen::VectorXi& weights);
  static CompactChoice su2(double spin);

  int dim_v() const;
  int dim_k() const;
  std::string name() const;
};

/// Point of the coadjoint orbit o(phi0) with a representative k, phi = Ad*(k) phi0.
struct OrbitPoint {
  RVector phi;
  CMatrix k;
};

/// K-invariant quadrature on o(phi0), total mass dim V.
struct OrbitRule {
  std::vector<OrbitPoint> points;
  std::vector<double> weights;
  int size() const { return static_cast<int>(points.size()); }
};

/// The compact factor with its irreducible representation and orbit geometry. The Lie
/// algebra is identified with R^{dim k} through a fixed basis A_r:
///   torus: A_r = i E_rr;  su2: A_r = i sigma_r / 2 (so [A_1, A_2] = -A_3).
/// Elements of k* are coordinate vectors phi_r = <phi, A_r>.
class CompactK {
 public:
  explicit CompactK(CompactChoice c);

  const CompactChoice& choice() const { return c_; }
  int n() const { return c_.n; }
  int dim_k() const { return c_.dim_k(); }
  int dim_v() const { return c_.dim_v(); }
  bool trivial() const { return c_.kind == KKind::Trivial; }

  const std::vector<CMatrix>& algebra_basis() const { return basis_; }
  RVector coords(const CMatrix& a) const;
  CMatrix from_coords(const RVector& x) const;

  bool is_member(const CMatrix& k, double tol = tol::exact) const;
  bool is_algebra(const CMatrix& a, double tol = tol::exact) const;
  void require_member(const CMatrix& k) const;

  CMatrix exp(const CMatrix& a) const;
  /// Coordinates x with exp(sum x_r A_r) = k.
  RVector log_coords(const CMatrix& k) const;

  CMatrix rho(const CMatrix& k) const;
  CMatrix drho(const CMatrix& a) const;
  CMatrix drho_basis(int r) const { return drho_basis_[r]; }

  /// Coordinates of Ad*(k) phi: (Ad*(k) phi)_r = <phi, k^{-1} A_r k>.
  RVector coadjoint(const CMatrix& k, const RVector& phi) const;
  double pairing(const RVector& phi, const CMatrix& a) const { return phi.dot(coords(a)); }

  RVector phi0() const;
  /// Highest-weight vector of V (index 0).
  CVector highest_weight_vector() const;
  OrbitPoint orbit_point(const CMatrix& k) const;
  /// su2 only: the orbit point j * u for a unit vector u, with the section
  /// k = exp(-theta m.A), m = e3 x u / |e3 x u|, theta = angle(e3, u).
  OrbitPoint orbit_point_from_direction(const RVector& u) const;

  /// Inverse chart: the orbit point with coordinates phi; throws ChartError off the orbit.
  OrbitPoint orbit_point_from_phi(const RVector& phi, double tol = 1e-9) const;

  CVector coherent_state(const OrbitPoint& p) const;
  /// s(B)(phi) = <B e_phi, e_phi> / <e_phi, e_phi>.
  cplx small_symbol(const CMatrix& b, const OrbitPoint& p) const;

  /// Gauss-Legendre in cos(theta) times trapezoid in azimuth for su2; a single point for
  /// the torus and trivial cases.
  OrbitRule orbit_rule(int order) const;

  CMatrix random_element(std::mt19937_64& rng) const;
  CMatrix random_algebra(std::mt19937_64& rng, double scale = 1.0) const;

 private:
  CompactChoice c_;
  std::vector<CMatrix> basis_;
  std::vector<CMatrix> drho_basis_;
  RMatrix basis_gram_inv_;
};

/// Berezin calculus on End(V): the Gram operator G = s^* s on End(V) (Hilbert-Schmidt),
/// b = s s^* and the unitary part w = b^{-1/2} s = s G^{-1/2}. End(V) elements are
/// vectorized column-major.
class SmallCalculus {
 public:
  SmallCalculus(const CompactK& k, int orbit_order);

  const CompactK& group() const { return k_; }
  const OrbitRule& rule() const { return rule_; }
  const CMatrix& gram() const { return gram_; }

  /// Preimage under s of w(B): G^{-1/2} B.
  CMatrix w_preimage(const CMatrix& b) const;
  /// Preimage under s of b(s(B)) = s(G B).
  CMatrix b_preimage(const CMatrix& b) const;
  /// Preimage under s of b^{1/2}(s(B)).
  CMatrix b_half_preimage(const CMatrix& b) const;

  cplx s(const CMatrix& b, const OrbitPoint& p) const { return k_.small_symbol(b, p); }
  cplx w(const CMatrix& b, const OrbitPoint& p) const { return k_.small_symbol(w_preimage(b), p); }

  /// int f g dnu over the orbit rule for f = s(F), g = s(G).
  cplx integrate_product(const CMatrix& f, const CMatrix& g) const;

 private:
  CMatrix apply_vec(const CMatrix& op, const CMatrix& b) const;

  CompactK k_;
  OrbitRule rule_;
  CMatrix gram_, gram_inv_sqrt_, gram_sqrt_;
};

/// Spin-j matrices (J_1, J_2, J_3) on the basis |j, m>, m = j, j-1, ..., -j.
std::vector<CMatrix> spin_matrices(double j);

/// Exponential of an anti-Hermitian matrix.
CMatrix exp_skew(const CMatrix& a);

}  // namespace sw
