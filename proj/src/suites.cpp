#include "stratweyl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>

#include "stratweyl/fock.hpp"
#include "stratweyl/linalg.hpp"

namespace sw {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"heisenberg-core", "segal-bargmann", "berezin-scalar",
                                              "weyl-scalar",     "compact-orbit",  "motion-fock",
                                              "motion-schrodinger", "sw-axioms", "orbit-transfer"};
  return names;
}

bool is_motion_suite(const std::string& name) {
  return name == "motion-fock" || name == "motion-schrodinger" || name == "sw-axioms" || name == "orbit-transfer";
}

double default_tolerance(const std::string& check) {
  static const std::map<std::string, double> t{
      {"group.associativity", 1e-12},
      {"group.coadjoint_equivariance", 1e-10},
      {"pi.homomorphism", 1e-6},
      {"pi.unitarity", 1e-6},
      {"sigma.homomorphism", 1e-6},
      {"sigma.unitarity", 1e-6},
      {"dpi.bracket", 1e-10},
      {"dsigma.bracket", 1e-10},
      {"dpi.skew", 1e-12},
      {"dsigma.skew", 1e-12},
      {"moment.equivariance", 1e-10},
      {"phase.equivariance", 1e-10},
      {"moment.S0_coeff", 1e-12},
      {"moment.W0_coeff", 1e-12},
      {"moment.S", 1e-8},
      {"symbol.covariance", 1e-8},
      {"sb.isometry", 1e-8},
      {"sb.intertwine", 1e-6},
      {"sb.group_intertwine", 1e-6},
      {"berezin.heat_vs_integral", 1e-6},
      {"berezin.zzbar", 1e-14},
      {"berezin.unit", 1e-12},
      {"u0.factorization", 1e-6},
      {"weyl.traciality", 1e-5},
      {"weyl.roundtrip", 1e-12},
      {"weyl.symmetrized", 1e-12},
      {"s.injective", 1e10},
      {"s.moment", 1e-10},
      {"s.covariance", 1e-12},
      {"w.unitary", 1e-8},
      {"heat.small", 1e-8},
      {"pi.tensor_vs_direct", 1e-8},
      {"tau.homomorphism", 1e-10},
      {"j.cocycle", 1e-10},
      {"sigma.conj_vs_product", 1e-7},
      {"dtau.spectral", 1e-8},
      {"dtau.two_path", 1e-7},
      {"tau_tilde.homomorphism", 1e-10},
      {"U.unit", 1e-12},
      {"U.reality", 1e-8},
      {"U.covariance", 1e-5},
      {"U.traciality", 1e-5},
      {"U.closed_form", 1e-6},
      {"Winv.unit", 1e-12},
      {"Winv.reality", 1e-8},
      {"Winv.covariance", 1e-5},
      {"Winv.traciality", 1e-5},
      {"Winv.closed_form", 1e-6},
      {"berezin.kernel_unit", 1e-10},
      {"berezin.tensor_vs_kernel", 1e-5},
      {"berezin.SSstar", 1e-5},
      {"berezin.S1", 1e-5},
      {"transfer.roundtrip", 1e-12},
      {"transfer.schrodinger_fock", 1e-5},
      {"transfer.orbit_pullback", 1e-5},
      {"transfer.tau_identity", 1e-12},
      {"transfer.constants", 0.0},
      {"transfer.chart_errors", 0.0},
  };
  const auto it = t.find(check);
  return it == t.end() ? tol::interior : it->second;
}

namespace {

using Rng = std::mt19937_64;

// Portable draws: the same bits on every platform.
double unif(Rng& r, double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(r() >> 11) * 0x1.0p-53); }

CVector rand_z(Rng& r, int n, double s) {
  CVector z(n);
  for (int k = 0; k < n; ++k) {
    const double x = unif(r, -s, s), y = unif(r, -s, s);
    z[k] = cplx(x, y);
  }
  return z;
}

RVector rand_r(Rng& r, int n, double s) {
  RVector v(n);
  for (int k = 0; k < n; ++k) v[k] = unif(r, -s, s);
  return v;
}

CMatrix rand_m(Rng& r, int rows, int cols) {
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double x = unif(r, -1, 1), y = unif(r, -1, 1);
      m(i, j) = cplx(x, y);
    }
  return m;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Operator supported on scalar degree <= deg (all V components).
OperatorMatrix low_operator(Rng& r, const Basis& b, int deg, bool hermitian) {
  const int L = b.interior_size(b.max_degree - deg) * b.dim_v;
  CMatrix m = CMatrix::Zero(b.size(), b.size());
  m.topLeftCorner(L, L) = rand_m(r, L, L);
  if (hermitian) m = (0.5 * (m + m.adjoint())).eval();
  return {b, std::move(m)};
}

// P^* A P for A supported on its leading L x L block.
OperatorMatrix conj_low(const OperatorMatrix& a, const OperatorMatrix& p, int L) {
  const CMatrix top = p.m.topRows(L);
  return {a.basis, top.adjoint() * a.m.topLeftCorner(L, L) * top};
}

double cvec_diff(const CVector& a, const CVector& b) { return a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0; }
double rvec_diff(const RVector& a, const RVector& b) { return a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0; }

// ---------------------------------------------------------------------------------------
// Backends: the scalar Heisenberg calculus and the motion-group calculus expose the same
// operations, so a check written once runs on both. With trivial K the motion backend
// performs the same floating-point operations as the scalar one.

struct ScalarBackend {
  using G = HeisElement;
  using X = HeisAlgElement;
  using Xi = HeisCoadjPoint;

  const SWCalculus& sw;

  int n() const { return sw.n(); }
  int N() const { return sw.N(); }
  double lam() const { return sw.lambda(); }
  int quad() const { return sw.setup().quad_order; }
  int dv() const { return 1; }

  G rand_g(Rng& r, Rng&, double s) const {
    G g = HeisElement::identity(n());
    for (int k = 0; k < n(); ++k) {
      g.a[k] = unif(r, -s, s);
      g.b[k] = unif(r, -s, s);
    }
    g.c = unif(r, -1, 1);
    return g;
  }
  X rand_x(Rng& r, Rng&, double s) const {
    X x{RVector(n()), RVector(n()), 0.0};
    for (int k = 0; k < n(); ++k) {
      x.a[k] = unif(r, -s, s);
      x.b[k] = unif(r, -s, s);
    }
    x.c = unif(r, -s, s);
    return x;
  }
  Xi rand_xi(Rng& r, Rng&) const {
    Xi xi{RVector(n()), RVector(n()), 0.0};
    for (int k = 0; k < n(); ++k) {
      xi.alpha[k] = unif(r, -1, 1);
      xi.beta[k] = unif(r, -1, 1);
    }
    xi.gamma = unif(r, 0.5, 2.0);
    return xi;
  }
  OrbitPoint rand_pt(Rng&) const { return sw.base_point(); }

  G mul(const G& g, const G& h) const { return h_mul(g, h); }
  G inv(const G& g) const { return h_inverse(g); }
  X bracket(const X& x, const X& y) const { return h_bracket(x, y); }
  std::vector<X> basis() const { return HeisAlgElement::basis(n()); }
  Xi coad(const G& g, const Xi& xi) const { return h_coadjoint(g, xi); }
  double gdiff(const G& g, const G& h) const {
    return std::max({rvec_diff(g.a, h.a), rvec_diff(g.b, h.b), std::abs(g.c - h.c), 0.0});
  }
  double xidiff(const Xi& x, const Xi& y) const {
    return std::max({rvec_diff(x.alpha, y.alpha), rvec_diff(x.beta, y.beta), std::abs(x.gamma - y.gamma), 0.0});
  }
  cplx pairing(const Xi& xi, const X& x) const { return h_pairing(xi, x); }

  OperatorMatrix pi(const G& g) const { return pi0_matrix(g, N(), lam()); }
  OperatorMatrix sigma(const G& g) const { return sigma0_matrix(g, N(), lam(), quad()); }
  OperatorMatrix dpi(const X& x) const { return dpi0_matrix(x, N(), lam()); }
  OperatorMatrix dsigma(const X& x) const { return dsigma0_matrix(x, N(), lam()); }
  CMatrix B() const { return sw.b0(); }

  CVector fact(const G& g, const CVector& z) const { return h_act_fock(g, z, lam()); }
  std::pair<RVector, RVector> pact(const G& g, const RVector& p, const RVector& q) const {
    RVector pp = p, qq = q;
    h_act_phase(g, pp, qq, lam());
    return {pp, qq};
  }
  OrbitPoint ptact(const G&, const OrbitPoint& pt) const { return pt; }
  Xi Phi(const CVector& z, const OrbitPoint&) const { return phi_lambda(z, lam()); }
  Xi Psi(const RVector& p, const RVector& q, const OrbitPoint&) const { return psi_lambda(p, q, lam()); }
  Xi off_center(Xi xi) const {
    xi.gamma = 2 * lam();
    return xi;
  }
  std::vector<Xi> off_chart(const Xi& xi) const { return {off_center(xi)}; }
  FockChartPoint Phi_inv(const Xi& xi) const {
    if (std::abs(xi.gamma - lam()) > 1e-9 * std::max(1.0, lam())) throw ChartError("central coordinate differs from lambda");
    FockChartPoint c;
    c.z = CVector(n());
    for (int k = 0; k < n(); ++k) c.z[k] = cplx(xi.alpha[k], xi.beta[k]);
    c.phi = sw.base_point();
    return c;
  }
  PhaseChartPoint Psi_inv(const Xi& xi) const {
    const FockChartPoint f = Phi_inv(xi);
    auto [p, q] = j_inverse(f.z, lam());
    return {p, q, f.phi};
  }
  double ptdiff(const OrbitPoint&, const OrbitPoint&) const { return 0.0; }

  cplx S(const OperatorMatrix& a, const CVector& z, const OrbitPoint&) const { return berezin_symbol0_at(a, z); }

  FockFunction U_exact(const OperatorMatrix& a, int mi) const {
    auto s = std::make_shared<GaussPolySymbol>(u0_via_weyl(a, sw.b0(), mi));
    return [s](const CVector& z, const OrbitPoint&) { return s->evaluate(z); };
  }
  PhaseFunction W_exact(const OperatorMatrix& a, int mi) const {
    auto s = std::make_shared<PhaseSymbol>(wigner_exact(a.m, a.basis, mi));
    return [s](const RVector& p, const RVector& q, const OrbitPoint&) { return s->evaluate(p, q); };
  }
  FockFunction U_point(const OperatorMatrix& a) const {
    auto w = std::make_shared<WignerEvaluator>(to_schrodinger(a, sw.b0()), quad());
    const double l = lam();
    return [w, l](const CVector& z, const OrbitPoint&) {
      const auto [p, q] = j_inverse(z, l);
      return w->value(p, q)(0, 0);
    };
  }
  PhaseFunction W_point(const OperatorMatrix& a) const {
    auto w = std::make_shared<WignerEvaluator>(a, quad());
    return [w](const RVector& p, const RVector& q, const OrbitPoint&) { return w->value(p, q)(0, 0); };
  }
  FockFunction U_lie(const X& x) const {
    auto s = std::make_shared<PolySymbol>(u0_via_weyl(dpi0_op(x, lam()), lam()));
    return [s](const CVector& z, const OrbitPoint&) { return s->evaluate(z); };
  }
  PhaseFunction W_lie(const X& x) const {
    auto s = std::make_shared<PhaseSymbol>(n(), lam(), wigner_dequantize(dsigma0_op(x, lam())), false);
    return [s](const RVector& p, const RVector& q, const OrbitPoint&) { return s->evaluate(p, q); };
  }
  FockFunction U_unit() const {
    auto s = std::make_shared<PolySymbol>(u0_via_weyl(DiffOp::identity(n()), lam()));
    return [s](const CVector& z, const OrbitPoint&) { return s->evaluate(z); };
  }
  PhaseFunction W_unit() const {
    auto s = std::make_shared<PhaseSymbol>(n(), lam(), wigner_dequantize(DiffOp::identity(n())), false);
    return [s](const RVector& p, const RVector& q, const OrbitPoint&) { return s->evaluate(p, q); };
  }
  cplx U_closed(const X& x, const CVector& z, const OrbitPoint&) const { return I * h_pairing(phi_lambda(z, lam()), x); }
  cplx W_closed(const X& x, const RVector& p, const RVector& q, const OrbitPoint&) const {
    return I * h_pairing(psi_lambda(p, q, lam()), x);
  }
  // int w(E_a) w(E_b) dnu over matrix units E_a, a = u * dim V + v.
  CMatrix small_w_gram() const { return CMatrix::Constant(1, 1, 1.0); }
};

struct MotionBackend {
  using G = MotionGroupElement;
  using X = MotionAlgElement;
  using Xi = CoadjointPoint;

  const SWCalculus& sw;

  const CompactK& K() const { return sw.group(); }
  int n() const { return sw.n(); }
  int N() const { return sw.N(); }
  double lam() const { return sw.lambda(); }
  int quad() const { return sw.setup().quad_order; }
  int dv() const { return sw.dim_v(); }

  G rand_g(Rng& r, Rng& kr, double s) const {
    G g = MotionGroupElement::identity(n());
    for (int k = 0; k < n(); ++k) {
      const double x = unif(r, -s, s), y = unif(r, -s, s);
      g.z0[k] = cplx(x, y);
    }
    g.c0 = unif(r, -1, 1);
    if (K().dim_k()) g.k = K().random_element(kr);
    return g;
  }
  X rand_x(Rng& r, Rng& kr, double s) const {
    X x = MotionAlgElement::zero(n());
    for (int k = 0; k < n(); ++k) {
      const double a = unif(r, -s, s), b = unif(r, -s, s);
      x.a[k] = cplx(a, b);
    }
    x.c = unif(r, -s, s);
    if (K().dim_k()) x.A = K().random_algebra(kr, s);
    return x;
  }
  Xi rand_xi(Rng& r, Rng& kr) const {
    Xi xi;
    xi.u1 = CVector(n());
    for (int k = 0; k < n(); ++k) {
      const double alpha = unif(r, -1, 1), beta = unif(r, -1, 1);
      xi.u1[k] = cplx(beta, -alpha);
    }
    xi.u2 = xi.u1.conjugate();
    xi.d = unif(r, 0.5, 2.0);
    xi.phi = rand_r(kr, K().dim_k(), 1.0);
    return xi;
  }
  OrbitPoint rand_pt(Rng& kr) const { return K().dim_k() ? K().orbit_point(K().random_element(kr)) : sw.base_point(); }

  G mul(const G& g, const G& h) const { return g_mul(g, h); }
  G inv(const G& g) const { return g_inverse(g); }
  X bracket(const X& x, const X& y) const { return m_bracket(x, y); }
  std::vector<X> basis() const { return MotionAlgElement::basis(K()); }
  Xi coad(const G& g, const Xi& xi) const { return g_coadjoint(K(), g, xi); }
  double gdiff(const G& g, const G& h) const {
    const HeisElement a = g.heis(), b = h.heis();
    return std::max({rvec_diff(a.a, b.a), rvec_diff(a.b, b.b), std::abs(a.c - b.c), max_abs_diff(g.k, h.k)});
  }
  double xidiff(const Xi& x, const Xi& y) const {
    // Heisenberg coordinates alpha = -Im u1, beta = Re u1, gamma = d, then the k* part.
    return std::max({rvec_diff(-x.u1.imag(), -y.u1.imag()), rvec_diff(x.u1.real(), y.u1.real()), std::abs(x.d - y.d),
                     rvec_diff(x.phi, y.phi)});
  }
  cplx pairing(const Xi& xi, const X& x) const { return m_pairing(K(), xi, x); }

  OperatorMatrix pi(const G& g) const { return pi_matrix(K(), g, N(), lam()); }
  OperatorMatrix sigma(const G& g) const { return sigma_matrix(K(), g, N(), lam(), quad()); }
  OperatorMatrix dpi(const X& x) const { return dpi_matrix(K(), x, N(), lam()); }
  OperatorMatrix dsigma(const X& x) const { return dsigma_matrix(K(), x, N(), lam()); }
  CMatrix B() const { return kron(sw.b0(), CMatrix::Identity(dv(), dv())); }

  CVector fact(const G& g, const CVector& z) const { return fock_action(g, z, lam()); }
  std::pair<RVector, RVector> pact(const G& g, const RVector& p, const RVector& q) const { return phase_action(g, p, q, lam()); }
  OrbitPoint ptact(const G& g, const OrbitPoint& pt) const { return K().dim_k() ? K().orbit_point(g.k * pt.k) : pt; }
  Xi Phi(const CVector& z, const OrbitPoint& pt) const { return big_phi(K(), z, pt.phi, lam()); }
  Xi Psi(const RVector& p, const RVector& q, const OrbitPoint& pt) const { return big_psi(K(), p, q, pt.phi, lam()); }
  std::vector<Xi> off_chart(const Xi& xi) const {
    std::vector<Xi> out;
    Xi a = xi;
    a.d = 2 * lam();
    out.push_back(a);
    Xi b = xi;
    b.u2 = 2.0 * xi.u2;
    b.u2[0] += 1.0;
    out.push_back(b);
    if (K().dim_k()) {
      Xi c = xi;
      c.phi = 1.5 * xi.phi;
      c.phi[0] += 0.5;
      out.push_back(c);
    }
    return out;
  }
  FockChartPoint Phi_inv(const Xi& xi) const { return phi_inverse(K(), xi, lam()); }
  PhaseChartPoint Psi_inv(const Xi& xi) const { return psi_inverse(K(), xi, lam()); }
  double ptdiff(const OrbitPoint& a, const OrbitPoint& b) const { return rvec_diff(a.phi, b.phi); }

  cplx S(const OperatorMatrix& a, const CVector& z, const OrbitPoint& pt) const { return big_symbol(K(), a, z, pt); }

  FockFunction U_exact(const OperatorMatrix& a, int mi) const {
    auto s = std::make_shared<FockSWSymbol>(fock_sw(sw, a, mi));
    const SWCalculus* c = &sw;
    return [s, c](const CVector& z, const OrbitPoint& pt) { return s->evaluate(c->small(), z, pt); };
  }
  PhaseFunction W_exact(const OperatorMatrix& a, int mi) const {
    auto s = std::make_shared<SchrodingerSWSymbol>(schrodinger_sw(sw, a, mi));
    const SWCalculus* c = &sw;
    return [s, c](const RVector& p, const RVector& q, const OrbitPoint& pt) { return s->evaluate(c->small(), p, q, pt); };
  }
  FockFunction U_point(const OperatorMatrix& a) const {
    auto e = std::make_shared<FockSWEvaluator>(sw, a);
    return [e](const CVector& z, const OrbitPoint& pt) { return (*e)(z, pt); };
  }
  PhaseFunction W_point(const OperatorMatrix& a) const {
    auto e = std::make_shared<SchrodingerSWEvaluator>(sw, a);
    return [e](const RVector& p, const RVector& q, const OrbitPoint& pt) { return (*e)(p, q, pt); };
  }
  FockFunction U_lie(const X& x) const {
    auto s = std::make_shared<FockLieSymbol>(fock_sw(sw, dpi_image(K(), x, lam())));
    const SWCalculus* c = &sw;
    return [s, c](const CVector& z, const OrbitPoint& pt) { return s->evaluate(c->small(), z, pt); };
  }
  PhaseFunction W_lie(const X& x) const {
    auto s = std::make_shared<SchrodingerLieSymbol>(schrodinger_sw(sw, dsigma_image(K(), x, lam())));
    const SWCalculus* c = &sw;
    return [s, c](const RVector& p, const RVector& q, const OrbitPoint& pt) { return s->evaluate(c->small(), p, q, pt); };
  }
  LieImage unit_image() const { return {DiffOp::identity(n()), CMatrix::Zero(dv(), dv())}; }
  FockFunction U_unit() const {
    auto s = std::make_shared<FockLieSymbol>(fock_sw(sw, unit_image()));
    const SWCalculus* c = &sw;
    return [s, c](const CVector& z, const OrbitPoint& pt) { return s->evaluate(c->small(), z, pt); };
  }
  PhaseFunction W_unit() const {
    auto s = std::make_shared<SchrodingerLieSymbol>(schrodinger_sw(sw, unit_image()));
    const SWCalculus* c = &sw;
    return [s, c](const RVector& p, const RVector& q, const OrbitPoint& pt) { return s->evaluate(c->small(), p, q, pt); };
  }
  cplx U_closed(const X& x, const CVector& z, const OrbitPoint& pt) const { return dpi_symbol_closed_form(sw, x, z, pt); }
  cplx W_closed(const X& x, const RVector& p, const RVector& q, const OrbitPoint& pt) const {
    return dsigma_symbol_closed_form(sw, x, p, q, pt);
  }
  CMatrix small_w_gram() const {
    const int d = dv(), d2 = d * d;
    const OrbitRule& rule = sw.small().rule();
    CMatrix vals(rule.size(), d2);
    for (int o = 0; o < rule.size(); ++o)
      for (int a = 0; a < d2; ++a) {
        CMatrix e = CMatrix::Zero(d, d);
        e(a / d, a % d) = 1.0;
        vals(o, a) = sw.small().w(e, rule.points[o]);
      }
    CMatrix g = CMatrix::Zero(d2, d2);
    for (int o = 0; o < rule.size(); ++o)
      for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d2; ++b) g(a, b) += rule.weights[o] * (vals(o, a) * vals(o, b));
    return g;
  }
};

// ---------------------------------------------------------------------------------------

struct Ctx {
  const SuiteConfig& cfg;
  std::vector<CheckResult>& out;
};

using CheckFn = std::function<double(Rng&, Rng&, std::string&)>;

double tolerance_for(const SuiteConfig& cfg, const std::string& name) {
  const auto it = cfg.tol.find(name);
  if (it != cfg.tol.end()) return it->second;
  if (cfg.tol_all) return *cfg.tol_all;
  return default_tolerance(name);
}

void run_check(Ctx& c, const std::string& name, const CheckFn& f) {
  if (!c.cfg.only.empty() && !c.cfg.only.count(name)) return;
  CheckResult r{name, 0.0, tolerance_for(c.cfg, name), ""};
  // Each check owns its streams, seeded from (seed, name); the K stream is separate so a
  // trivial K leaves the main stream untouched.
  const std::uint64_t h = fnv1a(name);
  Rng rng(c.cfg.seed * 0x9E3779B97F4A7C15ULL ^ h);
  Rng krng((c.cfg.seed + 0x632BE59BD9B4E019ULL) * 0xD1B54A32D192ED03ULL ^ h);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.residual = f(rng, krng, r.detail);
  } catch (const std::exception& e) {
    r.residual = std::numeric_limits<double>::infinity();
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.out.push_back(std::move(r));
}

int groups(const Ctx& c) { return std::max(1, c.cfg.groups); }

// --- group and representation checks ---------------------------------------------------

template <class B>
void group_checks(Ctx& c, const B& b) {
  run_check(c, "group.associativity", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 1.0), h = b.rand_g(r, kr, 1.0), k = b.rand_g(r, kr, 1.0);
      w = std::max(w, b.gdiff(b.mul(b.mul(g, h), k), b.mul(g, b.mul(h, k))));
    }
    return w;
  });
  run_check(c, "group.coadjoint_equivariance", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 1.0), h = b.rand_g(r, kr, 1.0);
      const auto xi = b.rand_xi(r, kr);
      w = std::max(w, b.xidiff(b.coad(b.mul(g, h), xi), b.coad(g, b.coad(h, xi))));
    }
    return w;
  });
}

template <class B, class Rep>
void rep_checks(Ctx& c, const B& b, const std::string& tag, Rep rep) {
  run_check(c, tag + ".homomorphism", [&](Rng& r, Rng& kr, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 0.5), h = b.rand_g(r, kr, 0.5);
      const OperatorMatrix P = rep(g), Q = rep(h), PQ = rep(b.mul(g, h));
      w = std::max(w, max_abs_diff((P * Q).interior(kGroupMargin), PQ.interior(kGroupMargin)));
    }
    d = "interior margin " + std::to_string(kGroupMargin);
    return w;
  });
  run_check(c, tag + ".unitarity", [&](Rng& r, Rng& kr, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const OperatorMatrix P = rep(b.rand_g(r, kr, 0.5));
      const CMatrix m = (P.adjoint() * P).interior(kGroupMargin);
      w = std::max(w, max_abs_diff(m, CMatrix::Identity(m.rows(), m.cols())));
    }
    d = "interior margin " + std::to_string(kGroupMargin);
    return w;
  });
}

template <class B, class DRep>
void drep_checks(Ctx& c, const B& b, const std::string& tag, DRep drep) {
  run_check(c, tag + ".bracket", [&](Rng& r, Rng& kr, std::string& d) {
    auto xs = b.basis();
    for (int t = 0; t < 3; ++t) xs.push_back(b.rand_x(r, kr, 1.0));
    std::vector<OperatorMatrix> m;
    for (const auto& x : xs) m.push_back(drep(x));
    double w = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const OperatorMatrix br = drep(b.bracket(xs[i], xs[j]));
        const OperatorMatrix cm = m[i] * m[j] - m[j] * m[i];
        w = std::max(w, max_abs_diff(cm.interior(kLadderMargin), br.interior(kLadderMargin)));
      }
    d = "interior margin " + std::to_string(kLadderMargin);
    return w;
  });
  run_check(c, tag + ".skew", [&](Rng& r, Rng& kr, std::string&) {
    auto xs = b.basis();
    for (int t = 0; t < 3; ++t) xs.push_back(b.rand_x(r, kr, 1.0));
    double w = 0.0;
    for (const auto& x : xs) {
      const OperatorMatrix m = drep(x);
      w = std::max(w, max_abs_diff(m.adjoint().interior(kLadderMargin), -m.interior(kLadderMargin)));
    }
    return w;
  });
}

template <class B>
void moment_equivariance(Ctx& c, const B& b) {
  run_check(c, "moment.equivariance", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 1.0);
      const CVector z = rand_z(r, b.n(), 1.0);
      const OrbitPoint pt = b.rand_pt(kr);
      w = std::max(w, b.xidiff(b.Phi(b.fact(g, z), b.ptact(g, pt)), b.coad(g, b.Phi(z, pt))));
    }
    return w;
  });
}

template <class B>
void phase_equivariance(Ctx& c, const B& b) {
  run_check(c, "phase.equivariance", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 1.0);
      const RVector p = rand_r(r, b.n(), 1.0), q = rand_r(r, b.n(), 1.0);
      const OrbitPoint pt = b.rand_pt(kr);
      const auto [gp, gq] = b.pact(g, p, q);
      w = std::max(w, b.xidiff(b.Psi(gp, gq, b.ptact(g, pt)), b.coad(g, b.Psi(p, q, pt))));
    }
    return w;
  });
}

template <class B>
void berezin_symbol_checks(Ctx& c, const B& b) {
  run_check(c, "moment.S", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (const auto& x : b.basis()) {
      const OperatorMatrix m = b.dpi(x);
      for (int t = 0; t < 5; ++t) {
        const CVector z = rand_z(r, b.n(), 1.0);
        const OrbitPoint pt = b.rand_pt(kr);
        w = std::max(w, std::abs(b.S(m, z, pt) - I * b.pairing(b.Phi(z, pt), x)));
      }
    }
    return w;
  });
  run_check(c, "symbol.covariance", [&](Rng& r, Rng& kr, std::string&) {
    const Basis fb = b.sw.fock_basis();
    const int L = fb.interior_size(fb.max_degree - 4) * fb.dim_v;
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 0.4);
      const OperatorMatrix A = low_operator(r, fb, 4, false);
      const OperatorMatrix Ag = conj_low(A, b.pi(g), L);
      const CVector z = rand_z(r, b.n(), 0.4);
      const OrbitPoint pt = b.rand_pt(kr);
      w = std::max(w, std::abs(b.S(A, b.fact(g, z), pt) - b.S(Ag, z, b.ptact(b.inv(g), pt))));
    }
    return w;
  });
}

template <class B>
void sb_shared_checks(Ctx& c, const B& b) {
  run_check(c, "sb.intertwine", [&](Rng&, Rng&, std::string& d) {
    const CMatrix Bm = b.B();
    const Basis fb = b.sw.fock_basis();
    double w = 0.0;
    for (const auto& x : b.basis()) {
      const OperatorMatrix lhs(fb, Bm * b.dsigma(x).m), rhs(fb, b.dpi(x).m * Bm);
      w = std::max(w, max_abs_diff(lhs.interior(kLadderMargin), rhs.interior(kLadderMargin)));
    }
    d = "interior margin " + std::to_string(kLadderMargin);
    return w;
  });
  run_check(c, "sb.group_intertwine", [&](Rng& r, Rng& kr, std::string& d) {
    const CMatrix Bm = b.B();
    const Basis fb = b.sw.fock_basis();
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 0.5);
      const OperatorMatrix lhs(fb, Bm * b.sigma(g).m), rhs(fb, b.pi(g).m * Bm);
      w = std::max(w, max_abs_diff(lhs.interior(kGroupMargin), rhs.interior(kGroupMargin)));
    }
    d = "interior margin " + std::to_string(kGroupMargin);
    return w;
  });
}

// --- SW axioms -----------------------------------------------------------------------------

int default_max_index(int n) { return n == 1 ? 6 : 3; }

// Bilinear Gram int f_a f_b dmu_lambda of Gaussian-type symbols on C^n (shared rate).
CMatrix fock_gram(const std::vector<GaussPolySymbol>& f, int n, double lambda, int deg) {
  const double rate = f.front().rate;
  for (const auto& s : f)
    if (s.rate != rate || !(rate > 0.0)) throw NumericError("fock_gram: symbols need a common positive rate");
  std::vector<QuadratureRule> rules(2 * n, gaussian_adapted(2 * deg + 2, 2 * rate, 0.0));
  const TensorRule t = tensor_rule(rules);
  CMatrix vals(t.count(), f.size());
  RVector wts(t.count());
  for (int i = 0; i < t.count(); ++i) {
    CVector z(n);
    for (int k = 0; k < n; ++k) z[k] = cplx(t.point(i)[k], t.point(i)[n + k]);
    wts[i] = t.weights[i] / std::pow(2 * kPi * lambda, n);
    for (std::size_t a = 0; a < f.size(); ++a) vals(i, a) = f[a].evaluate(z);
  }
  return vals.transpose() * wts.cast<cplx>().asDiagonal() * vals;
}

// Bilinear Gram int f_a f_b (2 pi)^{-n} dp dq of Wigner-type symbols.
CMatrix phase_gram(const std::vector<PhaseSymbol>& f, int n, double lambda, int deg) {
  for (const auto& s : f)
    if (!s.gaussian) throw NumericError("phase_gram: Gaussian-type symbols required");
  std::vector<QuadratureRule> rules;
  for (int k = 0; k < n; ++k) rules.push_back(gaussian_adapted(2 * deg + 2, 2 * lambda, 0.0));
  for (int k = 0; k < n; ++k) rules.push_back(gaussian_adapted(2 * deg + 2, 2 / lambda, 0.0));
  const TensorRule t = tensor_rule(rules);
  CMatrix vals(t.count(), f.size());
  RVector wts(t.count());
  for (int i = 0; i < t.count(); ++i) {
    RVector p(n), q(n);
    for (int k = 0; k < n; ++k) {
      p[k] = t.point(i)[k];
      q[k] = t.point(i)[n + k];
    }
    wts[i] = t.weights[i] / std::pow(2 * kPi, n);
    for (std::size_t a = 0; a < f.size(); ++a) vals(i, a) = f[a].evaluate(p, q);
  }
  return vals.transpose() * wts.cast<cplx>().asDiagonal() * vals;
}

// Worst |int W(A) W(B) - Tr(AB)| over rank-one A = |e_i (x) eps_u><e_j (x) eps_v|, whose
// symbols factor as f_ij(z) w(E_uv)(phi).
double traciality_residual(const CMatrix& Z, int L, const CMatrix& Wg, int dv) {
  double worst = 0.0;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j)
      for (int i2 = 0; i2 < L; ++i2)
        for (int j2 = 0; j2 < L; ++j2) {
          const cplx z = Z(i * L + j, i2 * L + j2);
          for (int u = 0; u < dv; ++u)
            for (int v = 0; v < dv; ++v)
              for (int u2 = 0; u2 < dv; ++u2)
                for (int v2 = 0; v2 < dv; ++v2) {
                  const double tr = (j == i2 && i == j2 && v == u2 && u == v2) ? 1.0 : 0.0;
                  worst = std::max(worst, std::abs(z * Wg(u * dv + v, u2 * dv + v2) - tr));
                }
        }
  return worst;
}

template <class B>
void axiom_checks(Ctx& c, const B& b, SWSide side, int max_index, int points) {
  const bool fock = side == SWSide::Fock;
  const std::string pre = fock ? "U." : "Winv.";
  const int mi = max_index > 0 ? max_index : default_max_index(b.n());
  const Basis basis = fock ? b.sw.fock_basis() : b.sw.hermite_basis();
  // Evaluates a symbol at a random sample; the Fock side draws z, the Schrodinger side (p, q).
  struct Sample {
    CVector z;
    RVector p, q;
    OrbitPoint pt;
  };
  auto draw = [&](Rng& r, Rng& kr, double s) {
    Sample x;
    if (fock) {
      x.z = rand_z(r, b.n(), s);
    } else {
      x.p = rand_r(r, b.n(), s);
      x.q = rand_r(r, b.n(), s);
    }
    x.pt = b.rand_pt(kr);
    return x;
  };
  using Sym = std::function<cplx(const Sample&)>;
  auto exact = [&](const OperatorMatrix& a, int deg) -> Sym {
    if (fock) {
      auto f = b.U_exact(a, deg);
      return [f](const Sample& s) { return f(s.z, s.pt); };
    }
    auto f = b.W_exact(a, deg);
    return [f](const Sample& s) { return f(s.p, s.q, s.pt); };
  };

  run_check(c, pre + "unit", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    if (fock) {
      const auto u = b.U_unit();
      for (int t = 0; t < points; ++t) {
        const Sample s = draw(r, kr, 1.0);
        w = std::max(w, std::abs(u(s.z, s.pt) - 1.0));
      }
    } else {
      const auto u = b.W_unit();
      for (int t = 0; t < points; ++t) {
        const Sample s = draw(r, kr, 1.0);
        w = std::max(w, std::abs(u(s.p, s.q, s.pt) - 1.0));
      }
    }
    return w;
  });

  run_check(c, pre + "reality", [&](Rng& r, Rng& kr, std::string&) {
    const OperatorMatrix h = low_operator(r, basis, 2, true);
    const OperatorMatrix a = low_operator(r, basis, 2, false);
    const Sym sh = exact(h, 2), sa = exact(a, 2), sas = exact(a.adjoint(), 2);
    double w = 0.0;
    for (int t = 0; t < 2 * points; ++t) {
      const Sample s = draw(r, kr, 1.0);
      w = std::max({w, std::abs(sh(s).imag()), std::abs(sas(s) - std::conj(sa(s)))});
    }
    return w;
  });

  run_check(c, pre + "covariance", [&](Rng& r, Rng& kr, std::string& d) {
    const OperatorMatrix a = low_operator(r, basis, 2, true);
    const int L = basis.interior_size(basis.max_degree - 2) * basis.dim_v;
    const Sym sa = exact(a, 2);
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 0.5);
      const OperatorMatrix ag = conj_low(a, fock ? b.pi(g) : b.sigma(g), L);
      for (int k = 0; k < 2; ++k) {
        const Sample s = draw(r, kr, 0.7);
        Sample gs = s;
        gs.pt = b.ptact(g, s.pt);
        cplx lhs;
        if (fock) {
          lhs = b.U_point(ag)(s.z, s.pt);
          gs.z = b.fact(g, s.z);
        } else {
          lhs = b.W_point(ag)(s.p, s.q, s.pt);
          std::tie(gs.p, gs.q) = b.pact(g, s.p, s.q);
        }
        w = std::max(w, std::abs(lhs - sa(gs)));
      }
    }
    d = std::to_string(groups(c)) + " group elements";
    return w;
  });

  run_check(c, pre + "traciality", [&](Rng&, Rng&, std::string& d) {
    const Basis sb = basis.scalar();
    const int L = sb.interior_size(sb.max_degree - mi);
    CMatrix Z;
    if (fock) {
      std::vector<GaussPolySymbol> f;
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) f.push_back(u0_via_weyl(rank_one(sb, i, j), b.sw.b0(), mi));
      Z = fock_gram(f, b.n(), b.lam(), 2 * mi);
    } else {
      std::vector<PhaseSymbol> f;
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) f.push_back(wigner_exact(rank_one(sb, i, j).m, sb, mi));
      Z = phase_gram(f, b.n(), b.lam(), 2 * mi);
    }
    d = "rank-one basis, scalar degree <= " + std::to_string(mi);
    return traciality_residual(Z, L, b.small_w_gram(), b.dv());
  });

  run_check(c, pre + "closed_form", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (const auto& x : b.basis()) {
      if (fock) {
        const auto u = b.U_lie(x);
        for (int t = 0; t < points; ++t) {
          const Sample s = draw(r, kr, 1.0);
          w = std::max(w, std::abs(u(s.z, s.pt) - b.U_closed(x, s.z, s.pt)));
        }
      } else {
        const auto u = b.W_lie(x);
        for (int t = 0; t < points; ++t) {
          const Sample s = draw(r, kr, 1.0);
          w = std::max(w, std::abs(u(s.p, s.q, s.pt) - b.W_closed(x, s.p, s.q, s.pt)));
        }
      }
    }
    return w;
  });
}

void u0_factorization(Ctx& c, const SWCalculus& sw) {
  run_check(c, "u0.factorization", [&](Rng&, Rng&, std::string& d) {
    const Basis sb = sw.fock_basis().scalar();
    const int L = std::min(7, sb.size());
    int deg = 0;
    while (sb.interior_size(sb.max_degree - deg) < L) ++deg;
    double w = 0.0;
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) {
        const OperatorMatrix r = rank_one(sb, i, j);
        w = std::max(w, max_coeff_diff(heat_flow(u0_via_weyl(r, sw.b0(), deg), sw.lambda() / 4), berezin_symbol0(r)));
      }
    d = "rank-one |e_j><e_k|, j, k <= " + std::to_string(L - 1);
    return w;
  });
}

// --- orbit transfer -------------------------------------------------------------------------

template <class B>
void transfer_checks(Ctx& c, const B& b) {
  const Basis hb = b.sw.hermite_basis();
  const int L = hb.interior_size(hb.max_degree - 2) * hb.dim_v;
  auto rank_one_pair = [&](Rng& r) {
    const int i = static_cast<int>(r() % static_cast<std::uint64_t>(L));
    const int j = static_cast<int>(r() % static_cast<std::uint64_t>(L));
    return rank_one(hb, i, j);
  };

  run_check(c, "transfer.roundtrip", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 10; ++t) {
      const CVector z = rand_z(r, b.n(), 1.0);
      const OrbitPoint pt = b.rand_pt(kr);
      const FockChartPoint f = b.Phi_inv(b.Phi(z, pt));
      w = std::max({w, cvec_diff(f.z, z), b.ptdiff(f.phi, pt)});
      const RVector p = rand_r(r, b.n(), 1.0), q = rand_r(r, b.n(), 1.0);
      const PhaseChartPoint s = b.Psi_inv(b.Psi(p, q, pt));
      w = std::max({w, rvec_diff(s.p, p), rvec_diff(s.q, q), b.ptdiff(s.phi, pt)});
    }
    return w;
  });

  run_check(c, "transfer.schrodinger_fock", [&](Rng& r, Rng& kr, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < 10; ++t) {
      const OperatorMatrix a = rank_one_pair(r);
      const auto u1 = b.U_exact(to_fock(a, b.sw.b0()), 2);
      const auto wi = b.W_exact(a, 2);
      for (int k = 0; k < 2; ++k) {
        const CVector z = rand_z(r, b.n(), 1.0);
        const OrbitPoint pt = b.rand_pt(kr);
        const auto [p, q] = j_inverse(z, b.lam());
        w = std::max(w, std::abs(u1(z, pt) - wi(p, q, pt)));
      }
    }
    d = "rank-one Hermite operators, scalar degree <= 2";
    return w;
  });

  run_check(c, "transfer.orbit_pullback", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 10; ++t) {
      const OperatorMatrix a = rank_one_pair(r);
      const auto u = b.U_exact(to_fock(a, b.sw.b0()), 2);
      const auto wi = b.W_exact(a, 2);
      for (int k = 0; k < 2; ++k) {
        const auto xi = b.Phi(rand_z(r, b.n(), 1.0), b.rand_pt(kr));
        const PhaseChartPoint s = b.Psi_inv(xi);
        const FockChartPoint f = b.Phi_inv(xi);
        w = std::max(w, std::abs(wi(s.p, s.q, s.phi) - u(f.z, f.phi)));
      }
    }
    return w;
  });

  run_check(c, "transfer.tau_identity", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const auto u = b.U_exact(to_fock(rank_one_pair(r), b.sw.b0()), 2);
      const auto ju = j_pullback(u, b.lam());
      for (int k = 0; k < 2; ++k) {
        const auto xi = b.Phi(rand_z(r, b.n(), 1.0), b.rand_pt(kr));
        const FockChartPoint f = b.Phi_inv(xi);
        const PhaseChartPoint s = b.Psi_inv(xi);
        w = std::max(w, std::abs(u(f.z, f.phi) - ju(s.p, s.q, s.phi)));
      }
    }
    return w;
  });

  run_check(c, "transfer.constants", [&](Rng& r, Rng& kr, std::string&) {
    const cplx v(unif(r, -2, 2), unif(r, -2, 2));
    const FockFunction f = [v](const CVector&, const OrbitPoint&) { return v; };
    const PhaseFunction g = [v](const RVector&, const RVector&, const OrbitPoint&) { return v; };
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const auto xi = b.Phi(rand_z(r, b.n(), 1.0), b.rand_pt(kr));
      const FockChartPoint fp = b.Phi_inv(xi);
      const PhaseChartPoint sp = b.Psi_inv(xi);
      w = std::max({w, std::abs(f(fp.z, fp.phi) - v), std::abs(g(sp.p, sp.q, sp.phi) - v)});
    }
    return w;
  });

  run_check(c, "transfer.chart_errors", [&](Rng& r, Rng& kr, std::string& d) {
    int missed = 0, tried = 0;
    for (int t = 0; t < 5; ++t) {
      const auto xi = b.Phi(rand_z(r, b.n(), 1.0), b.rand_pt(kr));
      for (const auto& bad : b.off_chart(xi)) {
        ++tried;
        try {
          b.Phi_inv(bad);
          ++missed;
        } catch (const ChartError&) {
        }
        try {
          b.Psi_inv(bad);
          ++missed;
        } catch (const ChartError&) {
        }
      }
    }
    d = std::to_string(missed) + " of " + std::to_string(2 * tried) + " off-chart points accepted";
    return static_cast<double>(missed);
  });
}

// --- scalar-only checks ----------------------------------------------------------------------

MultiIndex unit_index(int len, int k);

void moment_coefficients(Ctx& c, const SWCalculus& sw) {
  const int n = sw.n();
  const double lam = sw.lambda();
  run_check(c, "moment.S0_coeff", [&](Rng&, Rng&, std::string&) {
    double w = 0.0;
    for (const auto& x : HeisAlgElement::basis(n)) {
      const PolySymbol s = berezin_symbol0(dpi0_op(x, lam), lam);
      // i <Phi_lambda(z), X> as a polynomial in (z, conj z).
      Poly e(2 * n);
      for (int k = 0; k < n; ++k) {
        e.add_term(unit_index(2 * n, k), 0.5 * I * x.a[k] + 0.5 * x.b[k]);
        e.add_term(unit_index(2 * n, n + k), 0.5 * I * x.a[k] - 0.5 * x.b[k]);
      }
      e.add_term(MultiIndex(2 * n), I * lam * x.c);
      w = std::max(w, s.poly.max_coeff_diff(e));
    }
    return w;
  });
  run_check(c, "moment.W0_coeff", [&](Rng&, Rng&, std::string&) {
    double w = 0.0;
    for (const auto& x : HeisAlgElement::basis(n)) {
      const Poly s = wigner_dequantize(dsigma0_op(x, lam));
      Poly e(2 * n);
      for (int k = 0; k < n; ++k) {
        e.add_term(unit_index(2 * n, k), -I * lam * x.b[k]);
        e.add_term(unit_index(2 * n, n + k), I * x.a[k]);
      }
      e.add_term(MultiIndex(2 * n), I * lam * x.c);
      w = std::max(w, s.max_coeff_diff(e));
    }
    return w;
  });
}

MultiIndex unit_index(int len, int k) {
  MultiIndex e(len, 0);
  e[k] = 1;
  return e;
}

Poly random_poly(Rng& r, int nvars, int deg) {
  Poly p(nvars);
  const MultiIndexSet set(nvars, deg);
  for (int i = 0; i < set.size(); ++i) {
    const double x = unif(r, -1, 1), y = unif(r, -1, 1);
    p.add_term(set[i], cplx(x, y));
  }
  return p;
}

void berezin_scalar_only(Ctx& c, const SWCalculus& sw) {
  const int n = sw.n();
  const double lam = sw.lambda();
  run_check(c, "berezin.heat_vs_integral", [&](Rng& r, Rng&, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const PolySymbol f(n, random_poly(r, 2 * n, 6));
      const PolySymbol bf = berezin_transform0(f, lam);
      for (int k = 0; k < 3; ++k) {
        const CVector z = rand_z(r, n, 1.0);
        const cplx integral = berezin_transform0_integral([&](const CVector& v) { return f.evaluate(v); }, 0.0, z, lam, 12);
        w = std::max(w, std::abs(bf.evaluate(z) - integral));
      }
    }
    d = "random symbols of degree <= 6";
    return w;
  });
  run_check(c, "berezin.zzbar", [&](Rng&, Rng&, std::string&) {
    const PolySymbol f = PolySymbol::z_zbar(n, 0);
    Poly e = f.poly;
    e.add_term(MultiIndex(2 * n), 2 * lam);
    return berezin_transform0(f, lam).poly.max_coeff_diff(e);
  });
  run_check(c, "berezin.unit", [&](Rng& r, Rng&, std::string&) {
    const PolySymbol one = PolySymbol::constant(n, 1.0);
    const CVector z = rand_z(r, n, 1.0);
    const cplx integral = berezin_transform0_integral([](const CVector&) { return cplx(1.0); }, 0.0, z, lam, 4);
    return std::max(std::abs(berezin_transform0(one, lam).evaluate(z) - 1.0), std::abs(integral - 1.0));
  });
}

void sb_scalar_only(Ctx& c, const SWCalculus& sw) {
  run_check(c, "sb.isometry", [&](Rng&, Rng&, std::string& d) {
    const CMatrix& b0 = sw.b0();
    d = "full truncated block";
    return max_abs_diff(b0.adjoint() * b0, CMatrix::Identity(b0.cols(), b0.cols()));
  });
}

void weyl_scalar_only(Ctx& c, const SWCalculus& sw) {
  const int n = sw.n();
  const double lam = sw.lambda();
  run_check(c, "weyl.traciality", [&](Rng&, Rng&, std::string& d) {
    const int mi = n == 1 ? 8 : 3;
    const Basis sb = sw.hermite_basis().scalar();
    const int L = sb.interior_size(sb.max_degree - mi);
    std::vector<PhaseSymbol> f;
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) f.push_back(wigner_exact(rank_one(sb, i, j).m, sb, mi));
    d = "rank-one basis, degree <= " + std::to_string(mi);
    return traciality_residual(phase_gram(f, n, lam, 2 * mi), L, CMatrix::Constant(1, 1, 1.0), 1);
  });
  run_check(c, "weyl.roundtrip", [&](Rng& r, Rng&, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const Poly f = random_poly(r, 2 * n, 4);
      w = std::max(w, wigner_dequantize(weyl_quantize_poly(f)).max_coeff_diff(f));
    }
    return w;
  });
  run_check(c, "weyl.symmetrized", [&](Rng& r, Rng&, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const Poly f = random_poly(r, 2 * n, 4);
      w = std::max(w, weyl_quantize_poly(f).max_coeff_diff(weyl_quantize_symmetrized(f)));
    }
    return w;
  });
}

// --- K-only checks -----------------------------------------------------------------------

void compact_checks(Ctx& c, const SWCalculus& sw) {
  const CompactK& K = sw.group();
  const SmallCalculus& small = sw.small();
  const int dv = K.dim_v(), d2 = dv * dv;
  auto unit = [dv](int a) {
    CMatrix e = CMatrix::Zero(dv, dv);
    e(a / dv, a % dv) = 1.0;
    return e;
  };
  run_check(c, "s.injective", [&](Rng&, Rng& kr, std::string& d) {
    CMatrix M(d2, d2);
    for (int i = 0; i < d2; ++i) {
      const OrbitPoint pt = K.dim_k() ? K.orbit_point(K.random_element(kr)) : sw.base_point();
      for (int a = 0; a < d2; ++a) M(i, a) = K.small_symbol(unit(a), pt);
    }
    const Eigen::JacobiSVD<CMatrix> svd(M);
    const RVector s = svd.singularValues();
    d = "condition number at " + std::to_string(d2) + " sample points";
    return s[0] / s[s.size() - 1];
  });
  run_check(c, "s.moment", [&](Rng&, Rng& kr, std::string&) {
    double w = 0.0;
    for (const auto& A : K.algebra_basis())
      for (int t = 0; t < 5; ++t) {
        const OrbitPoint pt = K.orbit_point(K.random_element(kr));
        w = std::max(w, std::abs(K.small_symbol(K.drho(A), pt) - I * K.pairing(pt.phi, A)));
      }
    return w;
  });
  run_check(c, "w.unitary", [&](Rng&, Rng&, std::string&) {
    const OrbitRule& rule = small.rule();
    CMatrix vals(rule.size(), d2);
    for (int o = 0; o < rule.size(); ++o)
      for (int a = 0; a < d2; ++a) vals(o, a) = small.w(unit(a), rule.points[o]);
    CMatrix g = CMatrix::Zero(d2, d2);
    for (int o = 0; o < rule.size(); ++o)
      for (int a = 0; a < d2; ++a)
        for (int b = 0; b < d2; ++b) g(a, b) += rule.weights[o] * vals(o, a) * std::conj(vals(o, b));
    return max_abs_diff(g, CMatrix::Identity(d2, d2));
  });
  run_check(c, "s.covariance", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const CMatrix Bm = rand_m(r, dv, dv);
      const CMatrix k = K.random_element(kr);
      const OrbitPoint pt = K.orbit_point(K.random_element(kr));
      const CMatrix rk = K.rho(k);
      w = std::max(w, std::abs(K.small_symbol(rk.adjoint() * Bm * rk, pt) - K.small_symbol(Bm, K.orbit_point(k * pt.k))));
    }
    return w;
  });
  run_check(c, "heat.small", [&](Rng& r, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const CMatrix Bm = rand_m(r, dv, dv);
      const OrbitPoint pt = K.orbit_point(K.random_element(kr));
      w = std::max(w, std::abs(K.small_symbol(small.b_half_preimage(small.w_preimage(Bm)), pt) - K.small_symbol(Bm, pt)));
    }
    return w;
  });
}

void motion_fock_only(Ctx& c, const MotionBackend& b) {
  const CompactK& K = b.K();
  run_check(c, "pi.tensor_vs_direct", [&](Rng& r, Rng& kr, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 1.0);
      w = std::max(w, max_abs_diff(b.pi(g).m, pi_matrix_direct(K, g, b.N(), b.lam()).m));
    }
    d = std::to_string(groups(c)) + " group elements, full block";
    return w;
  });
  if (!K.dim_k()) return;
  run_check(c, "tau.homomorphism", [&](Rng&, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const CMatrix k1 = K.random_element(kr), k2 = K.random_element(kr);
      w = std::max(w, max_abs_diff(tau_matrix(k1 * k2, b.n(), b.N(), b.lam()),
                                   tau_matrix(k1, b.n(), b.N(), b.lam()) * tau_matrix(k2, b.n(), b.N(), b.lam())));
    }
    return w;
  });
  run_check(c, "j.cocycle", [&](Rng& r, Rng& kr, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 0.5), h = b.rand_g(r, kr, 0.5);
      const CVector z = rand_z(r, b.n(), 0.5);
      const CMatrix lhs = j_cocycle(K, g_mul(g, h), z, b.lam());
      const CMatrix rhs = j_cocycle(K, g, domain_action(h, z), b.lam()) * j_cocycle(K, h, z, b.lam());
      w = std::max(w, max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(lhs)));
    }
    d = "relative to max |J|";
    return w;
  });
}

void motion_schrodinger_only(Ctx& c, const MotionBackend& b) {
  const CompactK& K = b.K();
  run_check(c, "sigma.conj_vs_product", [&](Rng& r, Rng& kr, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < groups(c); ++t) {
      const auto g = b.rand_g(r, kr, 1.0);
      const OperatorMatrix s1 = b.sigma(g), s2 = sigma_matrix_conj(K, g, b.N(), b.lam(), b.sw.b0());
      w = std::max(w, max_abs_diff(s1.interior(kLadderMargin), s2.interior(kLadderMargin)));
    }
    d = std::to_string(groups(c)) + " group elements, interior margin " + std::to_string(kLadderMargin);
    return w;
  });
  if (!K.dim_k()) return;
  if (K.choice().kind == KKind::Torus) {
    run_check(c, "dtau.spectral", [&](Rng&, Rng&, std::string& d) {
      const Basis hb = b.sw.hermite_basis().scalar();
      const int L = hb.interior_size(2);
      double w = 0.0;
      for (int rr = 0; rr < b.n(); ++rr) {
        const CMatrix M = dtau_tilde_matrix(K.algebra_basis()[rr], b.N(), b.lam()).m;
        for (int col = 0; col < L; ++col) {
          CVector e = CVector::Zero(M.rows());
          e[col] = -I * static_cast<double>(hb.indices()[col][rr]);
          w = std::max(w, (M.col(col) - e).cwiseAbs().maxCoeff());
        }
      }
      d = "h_a with |a| <= N - 2";
      return w;
    });
  }
  run_check(c, "dtau.two_path", [&](Rng&, Rng&, std::string& d) {
    const Basis fb = b.sw.fock_basis().scalar();
    const CMatrix& b0 = b.sw.b0();
    const int L = fb.interior_size(kLadderMargin);
    double w = 0.0;
    for (const auto& A : K.algebra_basis()) {
      const CMatrix dt = dtau_tilde_matrix(A, b.N(), b.lam()).m;
      const CMatrix via = b0.adjoint() * materialize_fock(dtau_op(A), fb) * b0;
      w = std::max(w, max_abs_diff(leading_block(dt, L), leading_block(via, L)));
    }
    d = "interior margin " + std::to_string(kLadderMargin);
    return w;
  });
  run_check(c, "tau_tilde.homomorphism", [&](Rng&, Rng& kr, std::string&) {
    double w = 0.0;
    for (int t = 0; t < 5; ++t) {
      const CMatrix k1 = K.random_element(kr), k2 = K.random_element(kr);
      w = std::max(w, max_abs_diff(tau_tilde_matrix(K, k1 * k2, b.N(), b.lam()),
                                   tau_tilde_matrix(K, k1, b.N(), b.lam()) * tau_tilde_matrix(K, k2, b.N(), b.lam())));
    }
    return w;
  });
}

void big_berezin_checks(Ctx& c, const SWCalculus& sw) {
  const CompactK& K = sw.group();
  const int n = sw.n(), dv = K.dim_v();
  const int qo = n == 1 ? 24 : 12;
  run_check(c, "berezin.kernel_unit", [&](Rng& r, Rng& kr, std::string&) {
    const TensorSymbol one{GaussPolySymbol(PolySymbol::constant(n, 1.0), 0.0), CMatrix::Identity(dv, dv)};
    double w = 0.0;
    for (int t = 0; t < 3; ++t) {
      const CVector z = rand_z(r, n, 1.0);
      const OrbitPoint pt = K.dim_k() ? K.orbit_point(K.random_element(kr)) : sw.base_point();
      w = std::max({w, std::abs(big_berezin_kernel(sw, {one}, z, pt, qo) - 1.0), std::abs(big_berezin_tensor(sw, one, z, pt) - 1.0)});
    }
    return w;
  });
  run_check(c, "berezin.tensor_vs_kernel", [&](Rng& r, Rng& kr, std::string& d) {
    double w = 0.0;
    for (int t = 0; t < 10; ++t) {
      const TensorSymbol f{GaussPolySymbol(PolySymbol(n, random_poly(r, 2 * n, 3)), 0.0), rand_m(r, dv, dv)};
      const CVector z = rand_z(r, n, 1.0);
      const OrbitPoint pt = K.dim_k() ? K.orbit_point(K.random_element(kr)) : sw.base_point();
      w = std::max(w, std::abs(big_berezin_kernel(sw, {f}, z, pt, qo) - big_berezin_tensor(sw, f, z, pt)));
    }
    d = "10 random tensor symbols";
    return w;
  });
  auto ss_check = [&](bool s1) {
    return [&, s1](Rng& r, Rng& kr, std::string& d) {
      const Basis sb = sw.fock_basis().scalar();
      const int L = sb.interior_size(sb.max_degree - 2);
      double w = 0.0;
      for (int t = 0; t < 5; ++t) {
        const int i = static_cast<int>(r() % static_cast<std::uint64_t>(L));
        const int j = static_cast<int>(r() % static_cast<std::uint64_t>(L));
        const TensorSymbol f{berezin_symbol0(rank_one(sb, i, j)), rand_m(r, dv, dv)};
        const OperatorMatrix a = s1 ? s1_adjoint(sw, f) : s_adjoint(sw, f);
        for (int k = 0; k < 2; ++k) {
          const CVector z = rand_z(r, n, 0.8);
          const OrbitPoint pt = K.dim_k() ? K.orbit_point(K.random_element(kr)) : sw.base_point();
          const cplx lhs = s1 ? s1_symbol(sw, a, z, pt) : big_symbol(K, a, z, pt);
          w = std::max(w, std::abs(lhs - big_berezin_tensor(sw, f, z, pt)));
        }
      }
      d = "symbols of finite-rank operators";
      return w;
    };
  };
  run_check(c, "berezin.SSstar", ss_check(false));
  run_check(c, "berezin.S1", ss_check(true));
}

// --- assembly -----------------------------------------------------------------------------

void validate(const SuiteConfig& cfg) {
  const SWSetup& s = cfg.setup;
  if (!(s.lambda > 0.0) || !std::isfinite(s.lambda)) throw DimensionError("lambda must be positive");
  if (s.n != 1 && s.n != 2) throw DimensionError("n must be 1 or 2");
  if (s.choice.n != s.n) throw DimensionError("the compact factor acts on C^" + std::to_string(s.choice.n) + ", not C^" + std::to_string(s.n));
  if (s.N <= kGroupMargin) throw DimensionError("N must exceed the group margin " + std::to_string(kGroupMargin));
  if (s.quad_order < min_quadrature_order(s.N)) throw DimensionError("quadrature order must be at least N + 16");
  if (s.quad_order > kMaxGaussHermiteOrder) throw DimensionError("quadrature order exceeds " + std::to_string(kMaxGaussHermiteOrder));
  if (cfg.groups < 1) throw DimensionError("groups must be positive");
  for (const auto& [k, v] : cfg.tol)
    if (!(v >= 0.0)) throw DimensionError("tolerance for " + k + " must be non-negative");
  if (cfg.tol_all && !(*cfg.tol_all >= 0.0)) throw DimensionError("tolerance must be non-negative");
}

SWSetup scalar_setup(const SWSetup& s) {
  SWSetup t = s;
  t.choice = CompactChoice::trivial(s.n);
  return t;
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw DimensionError("unknown suite: " + name);
  validate(cfg);
  VerificationReport rep;
  rep.suite = name;
  Ctx c{cfg, rep.checks};
  const int points = 5;
  if (!is_motion_suite(name) && name != "compact-orbit") {
    const SWCalculus sw(scalar_setup(cfg.setup));
    const ScalarBackend b{sw};
    if (name == "heisenberg-core") {
      group_checks(c, b);
      rep_checks(c, b, "pi", [&](const auto& g) { return b.pi(g); });
      rep_checks(c, b, "sigma", [&](const auto& g) { return b.sigma(g); });
      drep_checks(c, b, "dpi", [&](const auto& x) { return b.dpi(x); });
      drep_checks(c, b, "dsigma", [&](const auto& x) { return b.dsigma(x); });
      moment_equivariance(c, b);
      phase_equivariance(c, b);
      moment_coefficients(c, sw);
    } else if (name == "segal-bargmann") {
      sb_scalar_only(c, sw);
      sb_shared_checks(c, b);
    } else if (name == "berezin-scalar") {
      berezin_scalar_only(c, sw);
      u0_factorization(c, sw);
      berezin_symbol_checks(c, b);
      big_berezin_checks(c, sw);
    } else {
      weyl_scalar_only(c, sw);
      axiom_checks(c, b, SWSide::Fock, 0, points);
      axiom_checks(c, b, SWSide::Schrodinger, 0, points);
      transfer_checks(c, b);
    }
    return rep;
  }
  const SWCalculus sw(cfg.setup);
  if (name == "compact-orbit") {
    compact_checks(c, sw);
    return rep;
  }
  const MotionBackend b{sw};
  if (name == "motion-fock") {
    group_checks(c, b);
    rep_checks(c, b, "pi", [&](const auto& g) { return b.pi(g); });
    drep_checks(c, b, "dpi", [&](const auto& x) { return b.dpi(x); });
    moment_equivariance(c, b);
    berezin_symbol_checks(c, b);
    motion_fock_only(c, b);
  } else if (name == "motion-schrodinger") {
    rep_checks(c, b, "sigma", [&](const auto& g) { return b.sigma(g); });
    drep_checks(c, b, "dsigma", [&](const auto& x) { return b.dsigma(x); });
    phase_equivariance(c, b);
    sb_shared_checks(c, b);
    motion_schrodinger_only(c, b);
  } else if (name == "sw-axioms") {
    axiom_checks(c, b, SWSide::Fock, 0, points);
    axiom_checks(c, b, SWSide::Schrodinger, 0, points);
    u0_factorization(c, sw);
    big_berezin_checks(c, sw);
  } else {
    transfer_checks(c, b);
  }
  return rep;
}

std::vector<VerificationReport> run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg) {
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw DimensionError("unknown suite: " + n);
  validate(cfg);
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [n, &cfg] { return run_suite(n, cfg); }));
  std::vector<VerificationReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

VerificationReport run_axiom_suite(const SWCalculus& sw, SWSide side, const SamplePlan& plan) {
  SuiteConfig cfg;
  cfg.setup = sw.setup();
  cfg.seed = plan.seed;
  cfg.groups = plan.groups;
  VerificationReport rep;
  rep.suite = side == SWSide::Fock ? "axioms-fock" : "axioms-schrodinger";
  Ctx c{cfg, rep.checks};
  axiom_checks(c, MotionBackend{sw}, side, plan.max_index, std::max(1, plan.points));
  return rep;
}

}  // namespace sw
