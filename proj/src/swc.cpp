#include "stratweyl/swc.hpp"

#include <cmath>

#include "stratweyl/fock.hpp"
#include "stratweyl/linalg.hpp"

namespace sw {

namespace {

int default_orbit_order(const CompactChoice& c) {
  return c.kind == KKind::SU2 ? static_cast<int>(std::lround(2 * c.j)) + 4 : 1;
}

}  // namespace

SWCalculus::SWCalculus(const SWSetup& s) : s_(s), k_(s.choice) {
  if (s.choice.n != s.n) throw DimensionError("SWCalculus: K acts on C^" + std::to_string(s.choice.n) + ", not C^" + std::to_string(s.n));
  if (s.N < 0) throw DimensionError("SWCalculus: truncation degree must be non-negative");
  if (!(s.lambda > 0.0)) throw DimensionError("SWCalculus: lambda must be positive");
  small_ = std::make_shared<SmallCalculus>(k_, s.orbit_order > 0 ? s.orbit_order : default_orbit_order(s.choice));
  b0_ = segal_bargmann_matrix(s.n, s.N, s.lambda, s.quad_order);
}

CVector j_map(const RVector& p, const RVector& q, double lambda) {
  if (p.size() != q.size()) throw DimensionError("j_map: dimension mismatch");
  CVector z(p.size());
  for (int k = 0; k < z.size(); ++k) z[k] = cplx(q[k], -lambda * p[k]);
  return z;
}

std::pair<RVector, RVector> j_inverse(const CVector& z, double lambda) {
  RVector p = -z.imag() / lambda;
  RVector q = z.real();
  return {p, q};
}

std::pair<RVector, RVector> phase_action(const MotionGroupElement& g, const RVector& p, const RVector& q, double lambda) {
  RVector pp = p, qq = q;
  if (!g.k.isIdentity(0.0)) std::tie(pp, qq) = j_inverse(g.k * j_map(p, q, lambda), lambda);
  h_act_phase(g.heis(), pp, qq, lambda);
  return {pp, qq};
}

OperatorMatrix v_block(const OperatorMatrix& a, int u, int v) {
  const int dv = a.basis.dim_v;
  if (u < 0 || v < 0 || u >= dv || v >= dv) throw DimensionError("v_block: block index out of range");
  const int M = a.basis.scalar_size();
  CMatrix m(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) m(i, j) = a.m(i * dv + u, j * dv + v);
  return {a.basis.scalar(), std::move(m)};
}

OperatorMatrix rank_one(const Basis& b, int i, int j) {
  if (i < 0 || j < 0 || i >= b.size() || j >= b.size()) throw DimensionError("rank_one: index out of range");
  CMatrix m = CMatrix::Zero(b.size(), b.size());
  m(i, j) = 1.0;
  return {b, std::move(m)};
}

CMatrix FockSWSymbol::block_values(const CVector& z) const {
  CMatrix m(dim_v, dim_v);
  for (int u = 0; u < dim_v; ++u)
    for (int v = 0; v < dim_v; ++v) m(u, v) = blocks[u * dim_v + v].evaluate(z);
  return m;
}

cplx FockSWSymbol::evaluate(const SmallCalculus& s, const CVector& z, const OrbitPoint& p) const {
  return s.w(block_values(z), p);
}

CMatrix SchrodingerSWSymbol::block_values(const RVector& p, const RVector& q) const {
  CMatrix m(dim_v, dim_v);
  for (int u = 0; u < dim_v; ++u)
    for (int v = 0; v < dim_v; ++v) m(u, v) = blocks[u * dim_v + v].evaluate(p, q);
  return m;
}

cplx SchrodingerSWSymbol::evaluate(const SmallCalculus& s, const RVector& p, const RVector& q, const OrbitPoint& pt) const {
  return s.w(block_values(p, q), pt);
}

namespace {

void require_v(const SWCalculus& sw, const OperatorMatrix& a, BasisKind kind, const char* what) {
  if (a.basis.kind != kind) throw DimensionError(std::string(what) + ": wrong basis kind");
  if (a.basis.dim_v != sw.dim_v()) throw DimensionError(std::string(what) + ": V dimension mismatch");
  if (a.basis.n != sw.n() || a.basis.max_degree != sw.N()) throw DimensionError(std::string(what) + ": basis differs from the calculus");
}

}  // namespace

FockSWSymbol fock_sw(const SWCalculus& sw, const OperatorMatrix& a, int max_index) {
  require_v(sw, a, BasisKind::Fock, "fock_sw");
  FockSWSymbol out;
  out.dim_v = sw.dim_v();
  for (int u = 0; u < out.dim_v; ++u)
    for (int v = 0; v < out.dim_v; ++v) out.blocks.push_back(u0_via_weyl(v_block(a, u, v), sw.b0(), max_index));
  return out;
}

SchrodingerSWSymbol schrodinger_sw(const SWCalculus& sw, const OperatorMatrix& a, int max_index) {
  require_v(sw, a, BasisKind::Hermite, "schrodinger_sw");
  SchrodingerSWSymbol out;
  out.dim_v = sw.dim_v();
  for (int u = 0; u < out.dim_v; ++u)
    for (int v = 0; v < out.dim_v; ++v) {
      const OperatorMatrix b = v_block(a, u, v);
      out.blocks.push_back(wigner_exact(b.m, b.basis, max_index));
    }
  return out;
}

FockSWEvaluator::FockSWEvaluator(const SWCalculus& sw, const OperatorMatrix& a)
    : sw_(&sw), w_(to_schrodinger(a, sw.b0()), sw.setup().quad_order) {
  require_v(sw, a, BasisKind::Fock, "FockSWEvaluator");
}

CMatrix FockSWEvaluator::block_values(const CVector& z) const {
  const auto [p, q] = j_inverse(z, sw_->lambda());
  return w_.value(p, q);
}

cplx FockSWEvaluator::operator()(const CVector& z, const OrbitPoint& p) const { return sw_->small().w(block_values(z), p); }

SchrodingerSWEvaluator::SchrodingerSWEvaluator(const SWCalculus& sw, const OperatorMatrix& a)
    : sw_(&sw), w_(a, sw.setup().quad_order) {
  require_v(sw, a, BasisKind::Hermite, "SchrodingerSWEvaluator");
}

cplx SchrodingerSWEvaluator::operator()(const RVector& p, const RVector& q, const OrbitPoint& pt) const {
  return sw_->small().w(w_.value(p, q), pt);
}

OperatorMatrix schrodinger_sw_inverse(const SWCalculus& sw, const std::vector<std::vector<Poly>>& f) {
  return weyl_quantize_opvalued(f, sw.hermite_basis());
}

LieImage dpi_image(const CompactK& K, const MotionAlgElement& X, double lambda) {
  return {dpi_scalar_op(X, lambda), K.dim_k() ? K.drho(X.A) : CMatrix::Zero(K.dim_v(), K.dim_v())};
}

LieImage dsigma_image(const CompactK& K, const MotionAlgElement& X, double lambda) {
  return {dsigma_scalar_op(X, lambda), K.dim_k() ? K.drho(X.A) : CMatrix::Zero(K.dim_v(), K.dim_v())};
}

cplx FockLieSymbol::evaluate(const SmallCalculus& s, const CVector& z, const OrbitPoint& p) const {
  cplx v = scalar.evaluate(z);
  if (!v_part.isZero(0.0)) v += s.w(v_part, p);
  return v;
}

cplx SchrodingerLieSymbol::evaluate(const SmallCalculus& s, const RVector& p, const RVector& q, const OrbitPoint& pt) const {
  cplx v = scalar.evaluate(p, q);
  if (!v_part.isZero(0.0)) v += s.w(v_part, pt);
  return v;
}

FockLieSymbol fock_sw(const SWCalculus& sw, const LieImage& d) { return {u0_via_weyl(d.scalar, sw.lambda()), d.v_part}; }

SchrodingerLieSymbol schrodinger_sw(const SWCalculus& sw, const LieImage& d) {
  return {PhaseSymbol(d.scalar.n(), sw.lambda(), wigner_dequantize(d.scalar), false), d.v_part};
}

namespace {

// Terms of the closed form beyond the Heisenberg part: w(d rho(A)) + Tr(A)/2 - conj(z).(A z) / 2 lambda.
cplx k_terms(const SWCalculus& sw, const CMatrix& A, const CVector& z, const OrbitPoint& p) {
  cplx v = 0.5 * A.trace() - (z.adjoint() * (A * z))(0, 0) / (2 * sw.lambda());
  if (sw.group().dim_k()) v += sw.small().w(sw.group().drho(A), p);
  return v;
}

}  // namespace

cplx dpi_symbol_closed_form(const SWCalculus& sw, const MotionAlgElement& X, const CVector& z, const OrbitPoint& p) {
  // (i/2)(conj(a).z + a.conj(z)) + i lambda c = i <Phi_lambda(z), X0>.
  cplx v = I * h_pairing(phi_lambda(z, sw.lambda()), X.heis());
  if (!X.A.isZero(0.0)) v += k_terms(sw, X.A, z, p);
  return v;
}

cplx dsigma_symbol_closed_form(const SWCalculus& sw, const MotionAlgElement& X, const RVector& p, const RVector& q,
                               const OrbitPoint& pt) {
  cplx v = I * h_pairing(psi_lambda(p, q, sw.lambda()), X.heis());
  if (!X.A.isZero(0.0)) v += k_terms(sw, X.A, j_map(p, q, sw.lambda()), pt);
  return v;
}

cplx TensorSymbol::evaluate(const CompactK& K, const CVector& z, const OrbitPoint& p) const {
  return f0.evaluate(z) * K.small_symbol(F, p);
}

cplx big_berezin_tensor(const SWCalculus& sw, const TensorSymbol& f, const CVector& z, const OrbitPoint& p) {
  return berezin_transform0(f.f0, sw.lambda()).evaluate(z) * sw.group().small_symbol(sw.small().b_preimage(f.F), p);
}

cplx big_berezin_kernel(const SWCalculus& sw, const std::vector<TensorSymbol>& f, const CVector& z, const OrbitPoint& p,
                        int quad_order) {
  const CompactK& K = sw.group();
  const OrbitRule& rule = sw.small().rule();
  double rate = -1.0;
  for (const auto& t : f) {
    if (rate >= 0.0 && t.f0.rate != rate) throw DimensionError("big_berezin_kernel: terms must share the Gaussian rate");
    rate = t.f0.rate;
  }
  if (rate < 0.0) return 0.0;
  const CVector ephi = K.coherent_state(p);
  cplx total = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const OrbitPoint& psi = rule.points[i];
    // |<e_psi, e_phi>|^2 for unit coherent states; identically 1 when dim V = 1.
    const double overlap = K.dim_v() == 1 ? 1.0 : std::norm(K.coherent_state(psi).dot(ephi));
    std::vector<cplx> s1;
    for (const auto& t : f) s1.push_back(K.small_symbol(t.F, psi));
    auto integrand = [&](const CVector& w) {
      cplx v = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k) v += f[k].f0.poly.evaluate(w) * s1[k];
      return v;
    };
    total += rule.weights[i] * overlap * berezin_transform0_integral(integrand, rate, z, sw.lambda(), quad_order);
  }
  return total;
}

OperatorMatrix s_adjoint(const SWCalculus& sw, const TensorSymbol& f) {
  const CMatrix s0 = berezin_adjoint0(f.f0, sw.fock_basis().scalar()).m;
  // s^*(s(F)) = int s(F)(psi) |e_psi><e_psi| dnu by the orbit rule.
  const CompactK& K = sw.group();
  const OrbitRule& rule = sw.small().rule();
  const int dv = K.dim_v();
  CMatrix s1 = CMatrix::Zero(dv, dv);
  for (int i = 0; i < rule.size(); ++i) {
    const cplx v = rule.weights[i] * K.small_symbol(f.F, rule.points[i]);
    if (dv == 1) {
      s1(0, 0) += v;
    } else {
      const CVector e = K.coherent_state(rule.points[i]);
      s1 += v * (e * e.adjoint()) / e.squaredNorm();
    }
  }
  return {sw.fock_basis(), kron(s0, s1)};
}

cplx s1_symbol(const SWCalculus& sw, const OperatorMatrix& a, const CVector& z, const OrbitPoint& p) {
  return big_symbol(sw.group(), to_fock(a, sw.b0()), z, p);
}

OperatorMatrix s1_adjoint(const SWCalculus& sw, const TensorSymbol& f) { return to_schrodinger(s_adjoint(sw, f), sw.b0()); }

CoadjointPoint big_psi(const CompactK& K, const RVector& p, const RVector& q, const RVector& phi, double lambda) {
  return big_phi(K, j_map(p, q, lambda), phi, lambda);
}

FockChartPoint phi_inverse(const CompactK& K, const CoadjointPoint& xi, double lambda, double tol) {
  if (xi.u1.size() != K.n() || xi.u2.size() != K.n()) throw DimensionError("phi_inverse: point dimension");
  if ((xi.u2 - xi.u1.conjugate()).norm() > tol) throw ChartError("phi_inverse: point is not real");
  if (std::abs(xi.d - lambda) > tol * std::max(1.0, lambda)) throw ChartError("phi_inverse: central coordinate differs from lambda");
  FockChartPoint out;
  out.z = I * xi.u1;
  RVector phi = xi.phi;
  if (K.dim_k()) {
    const CrossProduct cr{out.z, out.z.conjugate(), out.z, out.z.conjugate()};
    phi += cr.coords(K) / (2 * lambda);
  }
  out.phi = K.orbit_point_from_phi(phi, tol);
  return out;
}

PhaseChartPoint psi_inverse(const CompactK& K, const CoadjointPoint& xi, double lambda, double tol) {
  const FockChartPoint f = phi_inverse(K, xi, lambda, tol);
  auto [p, q] = j_inverse(f.z, lambda);
  return {p, q, f.phi};
}

OrbitFunction transfer_phi(FockFunction f, const CompactK& K, double lambda) {
  return [f = std::move(f), K, lambda](const CoadjointPoint& xi) {
    const FockChartPoint c = phi_inverse(K, xi, lambda);
    return f(c.z, c.phi);
  };
}

OrbitFunction transfer_psi(PhaseFunction g, const CompactK& K, double lambda) {
  return [g = std::move(g), K, lambda](const CoadjointPoint& xi) {
    const PhaseChartPoint c = psi_inverse(K, xi, lambda);
    return g(c.p, c.q, c.phi);
  };
}

PhaseFunction j_pullback(FockFunction f, double lambda) {
  return [f = std::move(f), lambda](const RVector& p, const RVector& q, const OrbitPoint& pt) {
    return f(j_map(p, q, lambda), pt);
  };
}

}  // namespace sw
