#include "stratweyl/motion.hpp"

#include <cmath>

#include "stratweyl/berezin0.hpp"
#include "stratweyl/fock.hpp"
#include "stratweyl/linalg.hpp"

namespace sw {

namespace {

// k.(z, w) = (k z, (k^t)^{-1} w)
std::pair<CVector, CVector> act(const CMatrix& k, const CVector& z, const CVector& w) {
  return {k * z, k.transpose().inverse() * w};
}

// A.(z, w) = (A z, -A^t w)
std::pair<CVector, CVector> act_alg(const CMatrix& A, const CVector& z, const CVector& w) {
  return {A * z, -A.transpose() * w};
}

void require_n(int a, int b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

// Exact identity test; the K-part of an operation is skipped for k == I so that the trivial
// group reproduces the Heisenberg computations bit for bit.
bool is_identity(const CMatrix& k) { return k.isIdentity(0.0); }

bool is_zero(const CMatrix& a) { return a.isZero(0.0); }

bool is_real_point(const CoadjointPoint& xi) { return xi.u2 == xi.u1.conjugate(); }

// Real points (u, conj u) pair with (a, conj a) as alpha.Re a + beta.Im a, alpha = -Im u, beta = Re u.
HeisCoadjPoint heis_part(const CoadjointPoint& xi) { return {-xi.u1.imag(), xi.u1.real(), xi.d}; }

CVector u_from_heis(const HeisCoadjPoint& h) {
  CVector u(h.alpha.size());
  for (int k = 0; k < u.size(); ++k) u[k] = cplx(h.beta[k], -h.alpha[k]);
  return u;
}

}  // namespace

MotionGroupElement MotionGroupElement::identity(int n) {
  return {CVector::Zero(n), 0.0, CMatrix::Identity(n, n)};
}

MotionGroupElement MotionGroupElement::from_heis(const HeisElement& g) {
  return {g.z0(), g.c, CMatrix::Identity(g.n(), g.n())};
}

HeisElement MotionGroupElement::heis() const { return {z0.real(), z0.imag(), c0}; }

MotionAlgElement MotionAlgElement::zero(int n) { return {CVector::Zero(n), 0.0, CMatrix::Zero(n, n)}; }

MotionAlgElement MotionAlgElement::from_heis(const HeisAlgElement& x) {
  CVector a = x.a.cast<cplx>() + I * x.b.cast<cplx>();
  return {a, x.c, CMatrix::Zero(x.n(), x.n())};
}

HeisAlgElement MotionAlgElement::heis() const { return {a.real(), a.imag(), c}; }

std::vector<MotionAlgElement> MotionAlgElement::basis(const CompactK& K) {
  std::vector<MotionAlgElement> out;
  for (const auto& h : HeisAlgElement::basis(K.n())) out.push_back(from_heis(h));
  for (const auto& A : K.algebra_basis()) out.push_back({CVector::Zero(K.n()), 0.0, A});
  return out;
}

cplx omega(const CVector& z, const CVector& w, const CVector& zp, const CVector& wp) {
  return 0.5 * I * (z.transpose() * wp - zp.transpose() * w)(0, 0);
}

cplx CrossProduct::evaluate(const CMatrix& A) const {
  const auto [av1, av2] = act_alg(A, v1, v2);
  return omega(u1, u2, av1, av2);
}

RVector CrossProduct::coords(const CompactK& K) const {
  // <v x u, .> as a functional; coordinates phi_r = <v x u, A_r>
  RVector out(K.dim_k());
  for (int r = 0; r < K.dim_k(); ++r) out[r] = evaluate(K.algebra_basis()[r]).real();
  return out;
}

MotionGroupElement g_mul(const MotionGroupElement& g, const MotionGroupElement& h) {
  require_n(g.n(), h.n(), "g_mul");
  const CVector kz = is_identity(g.k) ? h.z0 : CVector(g.k * h.z0);
  // Real pairs: omega(z0, k z0') = a.b' - b.a', the Heisenberg cocycle.
  const HeisElement p = h_mul(g.heis(), HeisElement{kz.real(), kz.imag(), h.c0});
  return {p.z0(), p.c, g.k * h.k};
}

MotionGroupElement g_inverse(const MotionGroupElement& g) {
  const CMatrix kinv = g.k.adjoint();
  return {-(kinv * g.z0), -g.c0, kinv};
}

MotionAlgElement m_bracket(const MotionAlgElement& X, const MotionAlgElement& Y) {
  require_n(X.n(), Y.n(), "m_bracket");
  const CVector a = X.A * Y.a - Y.A * X.a;
  const double c = h_bracket(X.heis(), Y.heis()).c;
  return {a, c, X.A * Y.A - Y.A * X.A};
}

cplx m_pairing(const CompactK& K, const CoadjointPoint& xi, const MotionAlgElement& X) {
  const double k = K.dim_k() ? K.pairing(xi.phi, X.A) : 0.0;
  if (is_real_point(xi)) {
    const double h = h_pairing(heis_part(xi), X.heis());
    return K.dim_k() ? h + k : h;
  }
  return omega(xi.u1, xi.u2, X.a, X.a.conjugate()) + xi.d * X.c + k;
}

MotionAlgElement g_adjoint(const MotionGroupElement& g, const MotionAlgElement& X) {
  const CMatrix Ak = g.k * X.A * g.k.adjoint();
  const CVector v1 = g.z0, v2 = g.z0.conjugate();
  const auto [kw1, kw2] = act(g.k, X.a, X.a.conjugate());
  const auto [av1, av2] = act_alg(Ak, v1, v2);
  const double c = X.c + (omega(v1, v2, kw1, kw2) - 0.5 * omega(v1, v2, av1, av2)).real();
  return {kw1 - av1, c, Ak};
}

CoadjointPoint g_coadjoint(const CompactK& K, const MotionGroupElement& g, const CoadjointPoint& xi) {
  if (is_real_point(xi)) {
    // Ad*(g) = Ad*(g0) Ad*(k): rotate, then translate through the Heisenberg action.
    CoadjointPoint r = xi;
    if (!is_identity(g.k)) {
      r.u1 = g.k * xi.u1;
      r.u2 = r.u1.conjugate();
      if (K.dim_k()) r.phi = K.coadjoint(g.k, xi.phi);
    }
    CoadjointPoint out;
    out.u1 = u_from_heis(h_coadjoint(g.heis(), heis_part(r)));
    out.u2 = out.u1.conjugate();
    out.d = xi.d;
    out.phi = r.phi;
    if (K.dim_k()) {
      const CVector v1 = g.z0, v2 = g.z0.conjugate();
      const CrossProduct cr{v1, v2, r.u1 - 0.5 * xi.d * v1, r.u2 - 0.5 * xi.d * v2};
      out.phi += cr.coords(K);
    }
    return out;
  }
  const CVector v1 = g.z0, v2 = g.z0.conjugate();
  const auto [ku1, ku2] = act(g.k, xi.u1, xi.u2);
  CoadjointPoint out;
  out.u1 = ku1 - xi.d * v1;
  out.u2 = ku2 - xi.d * v2;
  out.d = xi.d;
  if (K.dim_k()) {
    const CrossProduct cr{v1, v2, ku1 - 0.5 * xi.d * v1, ku2 - 0.5 * xi.d * v2};
    out.phi = K.coadjoint(g.k, xi.phi) + cr.coords(K);
  } else {
    out.phi = RVector();
  }
  return out;
}

MotionGroupElement generic_orbit_normalizer(const CoadjointPoint& xi) {
  if (xi.d == 0.0) throw DimensionError("generic_orbit_normalizer: d must be non-zero");
  const int n = static_cast<int>(xi.u1.size());
  return {xi.u1 / xi.d, 0.0, CMatrix::Identity(n, n)};
}

ComplexMotionElement ComplexMotionElement::from_real(const MotionGroupElement& g) {
  return {g.z0, g.z0.conjugate(), g.c0, g.k};
}

ComplexMotionElement gc_mul(const ComplexMotionElement& g, const ComplexMotionElement& h) {
  const auto [kz, kw] = act(g.k, h.z0, h.w0);
  return {g.z0 + kz, g.w0 + kw, g.c0 + h.c0 + 0.5 * omega(g.z0, g.w0, kz, kw), g.k * h.k};
}

ComplexMotionElement PDecomposition::plus() const {
  const int n = static_cast<int>(zeta.size());
  return {zeta, CVector::Zero(n), 0.0, CMatrix::Identity(n, n)};
}

ComplexMotionElement PDecomposition::middle() const {
  const int n = static_cast<int>(zeta.size());
  return {CVector::Zero(n), CVector::Zero(n), c, k};
}

ComplexMotionElement PDecomposition::minus() const {
  const int n = static_cast<int>(zeta.size());
  return {CVector::Zero(n), eta, 0.0, CMatrix::Identity(n, n)};
}

PDecomposition p_decompose(const ComplexMotionElement& g) {
  const cplx c = g.c0 - 0.25 * I * (g.z0.transpose() * g.w0)(0, 0);
  return {g.z0, c, g.k, g.k.transpose() * g.w0};
}

CVector domain_action(const MotionGroupElement& g, const CVector& z) { return g.z0 + g.k * z; }

CVector fock_action(const MotionGroupElement& g, const CVector& z, double lambda) {
  return h_act_fock(g.heis(), is_identity(g.k) ? z : CVector(g.k * z), lambda);
}

MotionGroupElement section(const CVector& z) { return {z, 0.0, CMatrix::Identity(z.size(), z.size())}; }

cplx kernel_k(const CVector& z, const CVector& w, double lambda) {
  return std::exp(0.5 * lambda * (z.transpose() * w.conjugate())(0, 0));
}

CMatrix j_cocycle(const CompactK& K, const MotionGroupElement& g, const CVector& z, double lambda) {
  const cplx e = I * lambda * g.c0 + 0.5 * lambda * (g.z0.conjugate().transpose() * (g.k * z))(0, 0) +
                 0.25 * lambda * g.z0.squaredNorm();
  return std::exp(e) * K.rho(g.k);
}

DiffOp dtau_op(const CMatrix& A) {
  const int n = static_cast<int>(A.rows());
  DiffOp d(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (A(k, l) == cplx(0.0)) continue;
      MultiIndex m(n, 0), e(n, 0);
      m[l] = 1;
      e[k] = 1;
      d += DiffOp::term(m, e, -A(k, l));
    }
  return d;
}

DiffOp dpi_scalar_op(const MotionAlgElement& X, double lambda) {
  if (is_zero(X.A)) return dpi0_op(X.heis(), lambda);
  return dpi0_op(X.heis(), lambda) + dtau_op(X.A);
}

DiffOp dtau_tilde_op(const CMatrix& A, double lambda) {
  const int n = static_cast<int>(A.rows());
  DiffOp d = DiffOp::identity(n, 0.5 * A.trace());
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const cplx a = A(k, l);
      if (a == cplx(0.0)) continue;
      MultiIndex z(n, 0), dd(n, 0), xk = z, xl = z, dk = z, dl = z;
      xk[k] += 1;
      xl[l] += 1;
      dk[k] += 1;
      dl[l] += 1;
      dd[k] += 1;
      dd[l] += 1;
      MultiIndex xx(n, 0);
      xx[k] += 1;
      xx[l] += 1;
      d += DiffOp::term(z, dd, a / (2 * lambda));
      d += DiffOp::term(xk, dl, 0.5 * a);
      d += DiffOp::term(xl, dk, -0.5 * a);
      d += DiffOp::term(xx, z, -0.5 * lambda * a);
    }
  return d;
}

DiffOp dsigma_scalar_op(const MotionAlgElement& X, double lambda) {
  if (is_zero(X.A)) return dsigma0_op(X.heis(), lambda);
  return dsigma0_op(X.heis(), lambda) + dtau_tilde_op(X.A, lambda);
}

namespace {

// Dense truncated product of monomial-coefficient vectors on a MultiIndexSet.
class DenseProduct {
 public:
  explicit DenseProduct(const MultiIndexSet& set) : set_(set), add_(set.size()) {
    for (int i = 0; i < set.size(); ++i)
      for (int j = 0; j < set.size(); ++j) {
        if (set.degree(i) + set.degree(j) > set.max_degree()) break;
        MultiIndex s = set[i];
        for (int k = 0; k < set.n(); ++k) s[k] += set[j][k];
        add_[i].push_back(set.index_of(s));
      }
  }
  CVector operator()(const CVector& a, const CVector& b) const {
    CVector out = CVector::Zero(a.size());
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] == cplx(0.0)) continue;
      for (std::size_t j = 0; j < add_[i].size(); ++j) out[add_[i][j]] += a[i] * b[j];
    }
    return out;
  }

 private:
  const MultiIndexSet& set_;
  std::vector<std::vector<int>> add_;  // add_[i][j]: index of set[i] + set[j] (graded order keeps j a prefix)
};

CVector monomial_coeffs(const Poly& p, const MultiIndexSet& set) {
  CVector v = CVector::Zero(set.size());
  for (const auto& [e, c] : p.terms()) {
    const int i = set.index_of(e);
    if (i >= 0) v[i] = c;
  }
  return v;
}

// Columns: Fock coefficients of prefactor(z) * prod_i (L_i(z))^{b_i} / sqrt(n_b), truncated
// at the basis degree.
CMatrix compose_columns(const std::vector<Poly>& linear, const Poly& prefactor, const Basis& basis) {
  const int n = basis.n, N = basis.max_degree;
  const auto& set = basis.indices();
  const DenseProduct mul(set);
  std::vector<std::vector<CVector>> pw(n);
  for (int i = 0; i < n; ++i) {
    const CVector li = monomial_coeffs(linear[i], set);
    pw[i].push_back(monomial_coeffs(Poly::constant(n, 1.0), set));
    for (int p = 1; p <= N; ++p) pw[i].push_back(mul(pw[i].back(), li));
  }
  const CVector pref = monomial_coeffs(prefactor, set);
  CMatrix out(set.size(), set.size());
  for (int col = 0; col < set.size(); ++col) {
    CVector p = pref;
    for (int i = 0; i < n; ++i) p = mul(p, pw[i][set[col][i]]);
    p /= std::sqrt(fock_norm_sq(set[col], basis.lambda));
    for (int r = 0; r < set.size(); ++r) p[r] *= std::sqrt(fock_norm_sq(set[r], basis.lambda));
    out.col(col) = p;
  }
  return out;
}

CMatrix with_rho(const CompactK& K, const CMatrix& scalar, const CMatrix& k) {
  if (K.dim_v() == 1) {
    const cplx r = K.rho(k)(0, 0);
    return r == cplx(1.0) ? scalar : CMatrix(scalar * r);
  }
  return kron(scalar, K.rho(k));
}

}  // namespace

CMatrix tau_matrix(const CMatrix& k, int n, int N, double lambda) {
  require_n(static_cast<int>(k.rows()), n, "tau_matrix");
  const Basis basis(BasisKind::Fock, n, N, lambda);
  const CMatrix kinv = k.inverse();
  std::vector<Poly> linear;
  for (int i = 0; i < n; ++i) {
    CVector r = kinv.row(i).transpose();
    linear.push_back(Poly::affine(std::span<const cplx>(r.data(), n), 0.0));
  }
  return compose_columns(linear, Poly::constant(n, 1.0), basis);
}

OperatorMatrix dtau_tilde_matrix(const CMatrix& A, int N, double lambda) {
  return materialize(dtau_tilde_op(A, lambda), Basis(BasisKind::Hermite, static_cast<int>(A.rows()), N, lambda));
}

CMatrix tau_tilde_matrix(const CompactK& K, const CMatrix& k, int N, double lambda) {
  K.require_member(k);
  const int M = Basis(BasisKind::Hermite, K.n(), N, lambda).scalar_size();
  if (K.dim_k() == 0 || is_identity(k)) return CMatrix::Identity(M, M);
  const CMatrix A = K.from_coords(K.log_coords(k));
  return exp_skew(dtau_tilde_matrix(A, N, lambda).m);
}

OperatorMatrix pi_matrix(const CompactK& K, const MotionGroupElement& g, int N, double lambda) {
  K.require_member(g.k);
  CMatrix scalar = pi0_matrix(g.heis(), N, lambda).m;
  if (!is_identity(g.k)) scalar = scalar * tau_matrix(g.k, K.n(), N, lambda);
  return {Basis(BasisKind::Fock, K.n(), N, lambda, K.dim_v()), with_rho(K, scalar, g.k)};
}

OperatorMatrix pi_matrix_direct(const CompactK& K, const MotionGroupElement& g, int N, double lambda) {
  K.require_member(g.k);
  const int n = K.n();
  const Basis basis(BasisKind::Fock, n, N, lambda);
  const CMatrix kinv = g.k.adjoint();
  const CVector shift = I * lambda * g.z0;
  std::vector<Poly> linear;
  for (int i = 0; i < n; ++i) {
    CVector r = kinv.row(i).transpose();
    linear.push_back(Poly::affine(std::span<const cplx>(r.data(), n), (kinv.row(i) * shift)(0, 0)));
  }
  CVector w = 0.5 * I * g.z0.conjugate();
  const Poly pref = std::exp(I * lambda * g.c0 - 0.25 * lambda * g.z0.squaredNorm()) *
                    exp_series(Poly::affine(std::span<const cplx>(w.data(), n), 0.0), N);
  const CMatrix scalar = compose_columns(linear, pref, basis);
  return {basis.with_v(K.dim_v()), with_rho(K, scalar, g.k)};
}

OperatorMatrix dpi_matrix(const CompactK& K, const MotionAlgElement& X, int N, double lambda) {
  const Basis basis(BasisKind::Fock, K.n(), N, lambda, K.dim_v());
  OperatorMatrix out = materialize(dpi_scalar_op(X, lambda), basis);
  if (K.dim_k()) out.m += kron(CMatrix::Identity(basis.scalar_size(), basis.scalar_size()), K.drho(X.A));
  return out;
}

OperatorMatrix sigma_matrix(const CompactK& K, const MotionGroupElement& g, int N, double lambda, int quad_order) {
  K.require_member(g.k);
  CMatrix scalar = sigma0_matrix(g.heis(), N, lambda, quad_order).m;
  if (!is_identity(g.k)) scalar = scalar * tau_tilde_matrix(K, g.k, N, lambda);
  return {Basis(BasisKind::Hermite, K.n(), N, lambda, K.dim_v()), with_rho(K, scalar, g.k)};
}

OperatorMatrix sigma_matrix_conj(const CompactK& K, const MotionGroupElement& g, int N, double lambda, const CMatrix& b0) {
  return to_schrodinger(pi_matrix(K, g, N, lambda), b0);
}

OperatorMatrix dsigma_matrix(const CompactK& K, const MotionAlgElement& X, int N, double lambda) {
  const Basis basis(BasisKind::Hermite, K.n(), N, lambda, K.dim_v());
  OperatorMatrix out = materialize(dsigma_scalar_op(X, lambda), basis);
  if (K.dim_k()) out.m += kron(CMatrix::Identity(basis.scalar_size(), basis.scalar_size()), K.drho(X.A));
  return out;
}

CMatrix presymbol(const OperatorMatrix& A, const CVector& z) {
  const Basis& b = A.basis;
  if (b.kind != BasisKind::Fock) throw DimensionError("presymbol: Fock-basis operator required");
  if (b.dim_v == 1) return CMatrix::Constant(1, 1, berezin_symbol0_at(A, z));
  const CVector c = coherent_state(z, b.max_degree, b.lambda).coeffs;
  const CMatrix C = kron(c, CMatrix::Identity(b.dim_v, b.dim_v));
  return (C.adjoint() * A.m * C) / c.squaredNorm();
}

cplx big_symbol(const CompactK& K, const OperatorMatrix& A, const CVector& z, const OrbitPoint& p) {
  if (A.basis.dim_v != K.dim_v()) throw DimensionError("big_symbol: V dimension mismatch");
  // dim V = 1: rho is a character and s is the identity on End(V) = C.
  if (K.dim_v() == 1) return presymbol(A, z)(0, 0);
  return K.small_symbol(presymbol(A, z), p);
}

CoadjointPoint big_phi(const CompactK& K, const CVector& z, const RVector& phi, double lambda) {
  CoadjointPoint xi;
  xi.u1 = -I * z;
  xi.u2 = I * z.conjugate();
  xi.d = lambda;
  if (K.dim_k()) {
    const CrossProduct cr{z, z.conjugate(), z, z.conjugate()};
    xi.phi = phi - cr.coords(K) / (2 * lambda);
  } else {
    xi.phi = RVector();
  }
  return xi;
}

}  // namespace sw
