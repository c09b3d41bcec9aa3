#pragma once

#include <functional>
#include <memory>

#include "stratweyl/berezin0.hpp"
#include "stratweyl/compactk.hpp"
#include "stratweyl/motion.hpp"
#include "stratweyl/weyl.hpp"

namespace sw {

struct SWSetup {
  double lambda = 1.0;
  int n = 1;
  int N = 24;
  int quad_order = 60;
  CompactChoice choice = CompactChoice::torus(Eigen::VectorXi::Ones(1));
  int orbit_order = 0;  // 0: 2j + 4 for su2 (exact for products of two symbols)
};

/// Shared data of the calculus at fixed (lambda, N, K): the compact factor with its small
/// calculus and the Segal-Bargmann matrix.
class SWCalculus {
 public:
  explicit SWCalculus(const SWSetup& s);

  const SWSetup& setup() const { return s_; }
  double lambda() const { return s_.lambda; }
  int n() const { return s_.n; }
  int N() const { return s_.N; }
  int dim_v() const { return k_.dim_v(); }
  const CompactK& group() const { return k_; }
  const SmallCalculus& small() const { return *small_; }
  const CMatrix& b0() const { return b0_; }

  Basis fock_basis() const { return Basis(BasisKind::Fock, s_.n, s_.N, s_.lambda, dim_v()); }
  Basis hermite_basis() const { return Basis(BasisKind::Hermite, s_.n, s_.N, s_.lambda, dim_v()); }
  OrbitPoint base_point() const { return k_.orbit_point(CMatrix::Identity(s_.n, s_.n)); }

 private:
  SWSetup s_;
  CompactK k_;
  std::shared_ptr<SmallCalculus> small_;
  CMatrix b0_;
};

enum class SWSide { Fock, Schrodinger };

/// j(p, q) = q - i lambda p and its inverse p = -Im z / lambda, q = Re z.
CVector j_map(const RVector& p, const RVector& q, double lambda);
std::pair<RVector, RVector> j_inverse(const CVector& z, double lambda);

/// G-action on phase space, g.(p, q) = j^{-1}(g.j(p, q)).
std::pair<RVector, RVector> phase_action(const MotionGroupElement& g, const RVector& p, const RVector& q, double lambda);

/// Scalar block A_uv with A = sum A_uv (x) E_uv.
OperatorMatrix v_block(const OperatorMatrix& a, int u, int v);
/// |e_i><e_j| for combined indices (scalar_index * dim V + v).
OperatorMatrix rank_one(const Basis& b, int i, int j);

/// Fock-side symbol sum_uv f_uv(z) w(E_uv)(phi); blocks stored row-major (u * dim V + v).
struct FockSWSymbol {
  int dim_v = 1;
  std::vector<GaussPolySymbol> blocks;

  CMatrix block_values(const CVector& z) const;
  cplx evaluate(const SmallCalculus& s, const CVector& z, const OrbitPoint& p) const;
};

/// Schrodinger-side symbol sum_uv f_uv(p, q) w(E_uv)(phi).
struct SchrodingerSWSymbol {
  int dim_v = 1;
  std::vector<PhaseSymbol> blocks;

  CMatrix block_values(const RVector& p, const RVector& q) const;
  cplx evaluate(const SmallCalculus& s, const RVector& p, const RVector& q, const OrbitPoint& pt) const;
};

/// U = U0 (x) w for Fock operators supported on scalar degree <= max_index (exact, through
/// the Weyl route per block).
FockSWSymbol fock_sw(const SWCalculus& sw, const OperatorMatrix& a, int max_index);
/// W^{-1} = W0^{-1} (x) w for Hermite operators supported on scalar degree <= max_index.
SchrodingerSWSymbol schrodinger_sw(const SWCalculus& sw, const OperatorMatrix& a, int max_index);

/// Pointwise U(A) for a general truncated Fock operator (Wigner quadrature per block).
class FockSWEvaluator {
 public:
  FockSWEvaluator(const SWCalculus& sw, const OperatorMatrix& a);
  CMatrix block_values(const CVector& z) const;
  cplx operator()(const CVector& z, const OrbitPoint& p) const;

 private:
  const SWCalculus* sw_;
  WignerEvaluator w_;
};

/// Pointwise W^{-1}(A) for a general truncated Hermite operator.
class SchrodingerSWEvaluator {
 public:
  SchrodingerSWEvaluator(const SWCalculus& sw, const OperatorMatrix& a);
  cplx operator()(const RVector& p, const RVector& q, const OrbitPoint& pt) const;

 private:
  const SWCalculus* sw_;
  WignerEvaluator w_;
};

/// W(f) = sum W0(f_uv) (x) E_uv for f = sum f_uv w(E_uv) with polynomial blocks.
OperatorMatrix schrodinger_sw_inverse(const SWCalculus& sw, const std::vector<std::vector<Poly>>& f);

/// D (x) I_V + I (x) B with D a polynomial differential operator and B in End(V).
struct LieImage {
  DiffOp scalar;
  CMatrix v_part;
};
LieImage dpi_image(const CompactK& K, const MotionAlgElement& X, double lambda);
LieImage dsigma_image(const CompactK& K, const MotionAlgElement& X, double lambda);

/// U0(D) + w(B), exact.
struct FockLieSymbol {
  PolySymbol scalar;
  CMatrix v_part;
  cplx evaluate(const SmallCalculus& s, const CVector& z, const OrbitPoint& p) const;
};
/// W0^{-1}(D) + w(B), exact.
struct SchrodingerLieSymbol {
  PhaseSymbol scalar;
  CMatrix v_part;
  cplx evaluate(const SmallCalculus& s, const RVector& p, const RVector& q, const OrbitPoint& pt) const;
};
FockLieSymbol fock_sw(const SWCalculus& sw, const LieImage& d);
SchrodingerLieSymbol schrodinger_sw(const SWCalculus& sw, const LieImage& d);

/// i lambda c + w(d rho(A))(phi) + Tr(A)/2 + (i/2)(conj(a).z + a.conj(z)) - conj(z).(A z) / 2 lambda.
cplx dpi_symbol_closed_form(const SWCalculus& sw, const MotionAlgElement& X, const CVector& z, const OrbitPoint& p);
/// The same expression at z = j(p, q).
cplx dsigma_symbol_closed_form(const SWCalculus& sw, const MotionAlgElement& X, const RVector& p, const RVector& q,
                               const OrbitPoint& pt);

/// f0(z) s(F)(phi).
struct TensorSymbol {
  GaussPolySymbol f0;
  CMatrix F;
  cplx evaluate(const CompactK& K, const CVector& z, const OrbitPoint& p) const;
};

/// Big Berezin transform on tensor terms: B0(f0) (x) b(s(F)), b(s(F)) = s(G F).
cplx big_berezin_tensor(const SWCalculus& sw, const TensorSymbol& f, const CVector& z, const OrbitPoint& p);
/// Kernel form: int f(w, psi) e^{-|z - w|^2 / 2 lambda} |<e_psi, e_phi>|^2 dmu_lambda(w) dnu(psi)
/// for f = sum of tensor terms, by Gauss-Hermite quadrature of order `quad_order` in w
/// and the orbit rule in psi.
cplx big_berezin_kernel(const SWCalculus& sw, const std::vector<TensorSymbol>& f, const CVector& z,
                        const OrbitPoint& p, int quad_order);

/// S^* f = int f |eps><eps| dmu_lambda dnu with eps = e^{-|z|^2 / 4 lambda} E_z e_phi, on a tensor
/// symbol: exact Gaussian moments in z, orbit quadrature in phi.
OperatorMatrix s_adjoint(const SWCalculus& sw, const TensorSymbol& f);
/// S_1(A) = S(B A B^{-1}) for a Hermite-basis operator.
cplx s1_symbol(const SWCalculus& sw, const OperatorMatrix& a, const CVector& z, const OrbitPoint& p);
/// S_1^* = B^{-1} S^* B.
OperatorMatrix s1_adjoint(const SWCalculus& sw, const TensorSymbol& f);

/// Psi(p, q, phi) = Phi(j(p, q), phi).
CoadjointPoint big_psi(const CompactK& K, const RVector& p, const RVector& q, const RVector& phi, double lambda);

struct FockChartPoint {
  CVector z;
  OrbitPoint phi;
};
struct PhaseChartPoint {
  RVector p, q;
  OrbitPoint phi;
};

/// Phi^{-1}(u, lambda, psi) = (i u1, orbit point psi + (1/2 lambda)(z, conj z) x (z, conj z)).
/// Throws ChartError unless the point is real, d = lambda and the k*-part lies on o(phi0).
FockChartPoint phi_inverse(const CompactK& K, const CoadjointPoint& xi, double lambda, double tol = 1e-9);
/// Psi^{-1} = (j^{-1} (x) 1) Phi^{-1}.
PhaseChartPoint psi_inverse(const CompactK& K, const CoadjointPoint& xi, double lambda, double tol = 1e-9);

using FockFunction = std::function<cplx(const CVector&, const OrbitPoint&)>;
using PhaseFunction = std::function<cplx(const RVector&, const RVector&, const OrbitPoint&)>;
using OrbitFunction = std::function<cplx(const CoadjointPoint&)>;

/// tau_Phi f = f o Phi^{-1}, tau_Psi g = g o Psi^{-1}.
OrbitFunction transfer_phi(FockFunction f, const CompactK& K, double lambda);
OrbitFunction transfer_psi(PhaseFunction g, const CompactK& K, double lambda);
/// (J (x) I) f = f o (j (x) 1).
PhaseFunction j_pullback(FockFunction f, double lambda);

}  // namespace sw
