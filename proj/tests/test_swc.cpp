#include <cmath>
#include <random>

#include "doctest.h"
#include "stratweyl/fock.hpp"
#include "stratweyl/linalg.hpp"
#include "stratweyl/quadrature.hpp"
#include "stratweyl/swc.hpp"
#include "test_util.hpp"

using namespace sw;
using swtest::random_cvec;
using swtest::random_motion;

namespace {

std::vector<SWSetup> setups() {
  Eigen::VectorXi m(1);
  m << 1;
  SWSetup torus;
  torus.choice = CompactChoice::torus(m);
  SWSetup triv;
  triv.choice = CompactChoice::trivial(1);
  SWSetup half;
  half.n = 2;
  half.N = 12;
  half.choice = CompactChoice::su2(0.5);
  SWSetup one = half;
  one.N = 10;
  one.choice = CompactChoice::su2(1.0);
  one.lambda = 0.7;
  return {torus, triv, half, one};
}

OrbitPoint random_orbit(std::mt19937_64& rng, const CompactK& K) { return K.orbit_point(K.random_element(rng)); }

RVector random_rvec(std::mt19937_64& rng, int n, double r) {
  RVector v(n);
  for (int i = 0; i < n; ++i) v[i] = swtest::uniform(rng, -r, r);
  return v;
}

// Random operator supported on scalar degree <= deg, all V components.
OperatorMatrix low_operator(std::mt19937_64& rng, const Basis& b, int deg, bool hermitian) {
  const int L = b.interior_size(b.max_degree - deg) * b.dim_v;
  CMatrix m = CMatrix::Zero(b.size(), b.size());
  m.topLeftCorner(L, L) = swtest::random_matrix(rng, L, L);
  if (hermitian) m = 0.5 * (m + m.adjoint()).eval();
  return {b, m};
}

}  // namespace

TEST_CASE("SW symbols of Lie algebra images match the closed forms") {
  std::mt19937_64 rng(5);
  for (const auto& s : setups()) {
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const OrbitPoint base = sw.base_point();
    // units
    const LieImage unit{DiffOp::identity(s.n), CMatrix::Zero(K.dim_v(), K.dim_v())};
    CHECK(std::abs(fock_sw(sw, unit).evaluate(sw.small(), random_cvec(rng, s.n, 1), base) - 1.0) < 1e-14);
    CHECK(std::abs(schrodinger_sw(sw, unit).evaluate(sw.small(), random_rvec(rng, s.n, 1), random_rvec(rng, s.n, 1), base) - 1.0) < 1e-14);
    for (const auto& X : MotionAlgElement::basis(K)) {
      const FockLieSymbol u = fock_sw(sw, dpi_image(K, X, s.lambda));
      const SchrodingerLieSymbol w = schrodinger_sw(sw, dsigma_image(K, X, s.lambda));
      for (int t = 0; t < 6; ++t) {
        const CVector z = random_cvec(rng, s.n, 1.0);
        const OrbitPoint p = random_orbit(rng, K);
        CHECK(std::abs(u.evaluate(sw.small(), z, p) - dpi_symbol_closed_form(sw, X, z, p)) < 1e-10);
        const RVector pp = random_rvec(rng, s.n, 1.0), qq = random_rvec(rng, s.n, 1.0);
        CHECK(std::abs(w.evaluate(sw.small(), pp, qq, p) - dsigma_symbol_closed_form(sw, X, pp, qq, p)) < 1e-10);
      }
    }
    // At z = 0 the closed form is i lambda c + w(d rho(A))(phi) + Tr(A)/2.
    if (K.dim_k()) {
      const MotionAlgElement X{CVector::Zero(s.n), 0.3, K.algebra_basis()[0]};
      const OrbitPoint p = random_orbit(rng, K);
      const cplx expect = I * s.lambda * 0.3 + sw.small().w(K.drho(X.A), p) + 0.5 * X.A.trace();
      CHECK(std::abs(dpi_symbol_closed_form(sw, X, CVector::Zero(s.n), p) - expect) < 1e-14);
    }
  }
}

TEST_CASE("exact and pointwise SW symbols agree; reality") {
  std::mt19937_64 rng(6);
  for (const auto& s : setups()) {
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const OperatorMatrix a = low_operator(rng, sw.fock_basis(), 2, false);
    const FockSWSymbol u = fock_sw(sw, a, 2);
    const FockSWEvaluator ue(sw, a);
    const FockSWSymbol ustar = fock_sw(sw, a.adjoint(), 2);
    const OperatorMatrix h = low_operator(rng, sw.hermite_basis(), 2, true);
    const SchrodingerSWSymbol w = schrodinger_sw(sw, h, 2);
    const SchrodingerSWEvaluator we(sw, h);
    for (int t = 0; t < 5; ++t) {
      const CVector z = random_cvec(rng, s.n, 1.0);
      const OrbitPoint p = random_orbit(rng, K);
      const cplx v = u.evaluate(sw.small(), z, p);
      CHECK(std::abs(v - ue(z, p)) < 1e-8);
      CHECK(std::abs(ustar.evaluate(sw.small(), z, p) - std::conj(v)) < 1e-12);
      const RVector pp = random_rvec(rng, s.n, 1.0), qq = random_rvec(rng, s.n, 1.0);
      const cplx x = w.evaluate(sw.small(), pp, qq, p);
      CHECK(std::abs(x.imag()) < 1e-10);
      CHECK(std::abs(x - we(pp, qq, p)) < 1e-8);
    }
  }
}

TEST_CASE("covariance of U and W^{-1}") {
  std::mt19937_64 rng(7);
  for (const auto& s : setups()) {
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const OperatorMatrix a = low_operator(rng, sw.fock_basis(), 2, true);
    const OperatorMatrix h = low_operator(rng, sw.hermite_basis(), 2, true);
    const FockSWSymbol u = fock_sw(sw, a, 2);
    const SchrodingerSWSymbol w = schrodinger_sw(sw, h, 2);
    for (int t = 0; t < 3; ++t) {
      const MotionGroupElement g = random_motion(rng, K, 0.4);
      const OperatorMatrix pg = pi_matrix(K, g, s.N, s.lambda);
      const FockSWEvaluator lhs(sw, pg.adjoint() * a * pg);
      const OperatorMatrix sg = sigma_matrix(K, g, s.N, s.lambda, s.quad_order);
      const SchrodingerSWEvaluator lhs2(sw, sg.adjoint() * h * sg);
      for (int r = 0; r < 2; ++r) {
        const CVector z = random_cvec(rng, s.n, 0.7);
        const OrbitPoint p = random_orbit(rng, K);
        const OrbitPoint gp = K.orbit_point(g.k * p.k);
        CHECK(std::abs(lhs(z, p) - u.evaluate(sw.small(), fock_action(g, z, s.lambda), gp)) < 1e-6);
        const RVector pp = random_rvec(rng, s.n, 0.7), qq = random_rvec(rng, s.n, 0.7);
        const auto [gpp, gqq] = phase_action(g, pp, qq, s.lambda);
        CHECK(std::abs(lhs2(pp, qq, p) - w.evaluate(sw.small(), gpp, gqq, gp)) < 1e-6);
      }
    }
  }
}

TEST_CASE("traciality by product quadrature") {
  for (const auto& s : setups()) {
    if (s.choice.kind == KKind::SU2 && s.choice.j > 0.5) continue;
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const int deg = s.n == 1 ? 3 : 1;
    const Basis fb = sw.fock_basis();
    const int L = fb.interior_size(fb.max_degree - deg) * fb.dim_v;
    std::vector<FockSWSymbol> syms;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) {
        syms.push_back(fock_sw(sw, rank_one(fb, i, j), deg));
        idx.push_back({i, j});
      }
    // Products carry e^{-2|z|^2 / lambda} times a polynomial of degree <= 4 deg per coordinate.
    std::vector<QuadratureRule> f(2 * s.n, gaussian_adapted(2 * deg + 2, 2.0 / s.lambda, 0.0));
    const TensorRule t = tensor_rule(f);
    const OrbitRule& orb = sw.small().rule();
    CMatrix vals(t.count() * orb.size(), syms.size());
    RVector wts(t.count() * orb.size());
    for (int c = 0; c < t.count(); ++c) {
      CVector z(s.n);
      for (int k = 0; k < s.n; ++k) z[k] = cplx(t.point(c)[k], t.point(c)[s.n + k]);
      for (int o = 0; o < orb.size(); ++o) {
        const int row = c * orb.size() + o;
        wts[row] = t.weights[c] * orb.weights[o] / std::pow(2 * kPi * s.lambda, s.n);
        for (std::size_t a = 0; a < syms.size(); ++a) vals(row, a) = syms[a].evaluate(sw.small(), z, orb.points[o]);
      }
    }
    const CMatrix gram = vals.transpose() * wts.cast<cplx>().asDiagonal() * vals;
    double worst = 0.0;
    for (std::size_t a = 0; a < syms.size(); ++a)
      for (std::size_t b = 0; b < syms.size(); ++b) {
        const double tr = (idx[a].second == idx[b].first && idx[a].first == idx[b].second) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(gram(a, b) - tr));
      }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("polar decomposition by forward heat on each factor") {
  std::mt19937_64 rng(8);
  for (const auto& s : setups()) {
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const Basis sb = sw.fock_basis().scalar();
    for (int i = 0; i < sb.interior_size(sb.max_degree - 2); ++i)
      for (int j = 0; j < sb.interior_size(sb.max_degree - 2); ++j) {
        const OperatorMatrix r = rank_one(sb, i, j);
        const GaussPolySymbol u0 = u0_via_weyl(r, sw.b0(), 2);
        CHECK(max_coeff_diff(heat_flow(u0, s.lambda / 4), berezin_symbol0(r)) < 1e-10);
      }
    const CMatrix B = swtest::random_matrix(rng, K.dim_v(), K.dim_v());
    for (int t = 0; t < 5; ++t) {
      const OrbitPoint p = random_orbit(rng, K);
      CHECK(std::abs(K.small_symbol(sw.small().b_half_preimage(sw.small().w_preimage(B)), p) - K.small_symbol(B, p)) < 1e-10);
    }
  }
}

TEST_CASE("big Berezin transform: kernel, tensor and S S^* forms") {
  std::mt19937_64 rng(9);
  for (const auto& s : setups()) {
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const int qo = s.n == 1 ? 40 : 10;
    const PolySymbol one = PolySymbol::constant(s.n, 1.0);
    const TensorSymbol unit{GaussPolySymbol(one, 0.0), CMatrix::Identity(K.dim_v(), K.dim_v())};
    const CVector z0 = random_cvec(rng, s.n, 1.0);
    const OrbitPoint p0 = random_orbit(rng, K);
    CHECK(std::abs(big_berezin_kernel(sw, {unit}, z0, p0, qo) - 1.0) < 1e-10);
    CHECK(std::abs(big_berezin_tensor(sw, unit, z0, p0) - 1.0) < 1e-12);
    for (int t = 0; t < 3; ++t) {
      Poly poly(2 * s.n);
      const MultiIndexSet set(2 * s.n, 3);
      for (int i = 0; i < set.size(); ++i) poly.add_term(set[i], cplx(swtest::uniform(rng, -1, 1), swtest::uniform(rng, -1, 1)));
      const TensorSymbol f{GaussPolySymbol(PolySymbol(s.n, poly), 0.0), swtest::random_matrix(rng, K.dim_v(), K.dim_v())};
      const CVector z = random_cvec(rng, s.n, 1.0);
      const OrbitPoint p = random_orbit(rng, K);
      CHECK(std::abs(big_berezin_kernel(sw, {f}, z, p, qo) - big_berezin_tensor(sw, f, z, p)) < 1e-8);
    }
    // B = S S^* = S_1 S_1^* on symbols of finite-rank operators
    const Basis sb = sw.fock_basis().scalar();
    for (int t = 0; t < 3; ++t) {
      const int i = t % 3, j = (t + 1) % 3;
      const OperatorMatrix r = rank_one(sb, i, j);
      const TensorSymbol f{berezin_symbol0(r), swtest::random_matrix(rng, K.dim_v(), K.dim_v())};
      const OperatorMatrix ss = s_adjoint(sw, f);
      const OperatorMatrix ss1 = s1_adjoint(sw, f);
      for (int r2 = 0; r2 < 3; ++r2) {
        const CVector z = random_cvec(rng, s.n, 0.8);
        const OrbitPoint p = random_orbit(rng, K);
        const cplx ref = big_berezin_tensor(sw, f, z, p);
        CHECK(std::abs(big_symbol(K, ss, z, p) - ref) < 1e-7);
        CHECK(std::abs(s1_symbol(sw, ss1, z, p) - ref) < 1e-7);
      }
    }
  }
}

TEST_CASE("Schrodinger-Fock relation and orbit transfers") {
  std::mt19937_64 rng(10);
  for (const auto& s : setups()) {
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const Basis hb = sw.hermite_basis();
    const int L = hb.interior_size(hb.max_degree - 2) * hb.dim_v;
    for (int t = 0; t < 4; ++t) {
      std::uniform_int_distribution<int> pick(0, L - 1);
      const OperatorMatrix a = rank_one(hb, pick(rng), pick(rng));
      const FockSWSymbol u = fock_sw(sw, to_fock(a, sw.b0()), 2);
      const SchrodingerSWEvaluator w(sw, a);
      const FockFunction uf = [&](const CVector& z, const OrbitPoint& p) { return u.evaluate(sw.small(), z, p); };
      const PhaseFunction wf = [&](const RVector& p, const RVector& q, const OrbitPoint& pt) { return w(p, q, pt); };
      const OrbitFunction w1 = transfer_psi(wf, K, s.lambda);
      const OrbitFunction w2 = transfer_phi(uf, K, s.lambda);
      const OrbitFunction w3 = transfer_psi(j_pullback(uf, s.lambda), K, s.lambda);
      for (int r = 0; r < 3; ++r) {
        const CVector z = random_cvec(rng, s.n, 1.0);
        const OrbitPoint p = random_orbit(rng, K);
        const auto [pp, qq] = j_inverse(z, s.lambda);
        CHECK(std::abs(uf(z, p) - wf(pp, qq, p)) < 1e-8);
        const CoadjointPoint xi = big_phi(K, z, p.phi, s.lambda);
        CHECK(std::abs(w1(xi) - w2(xi)) < 1e-8);
        CHECK(std::abs(w2(xi) - w3(xi)) < 1e-12);
        // round trips through the charts
        const FockChartPoint c = phi_inverse(K, xi, s.lambda);
        CHECK((c.z - z).norm() < 1e-12);
        if (K.dim_k()) CHECK((c.phi.phi - p.phi).norm() < 1e-10);
        const PhaseChartPoint c2 = psi_inverse(K, big_psi(K, pp, qq, p.phi, s.lambda), s.lambda);
        CHECK((c2.p - pp).norm() < 1e-12);
        CHECK((c2.q - qq).norm() < 1e-12);
      }
    }
    const OrbitFunction cst = transfer_phi([](const CVector&, const OrbitPoint&) { return cplx(2.5); }, K, s.lambda);
    CoadjointPoint xi = big_phi(K, random_cvec(rng, s.n, 1.0), random_orbit(rng, K).phi, s.lambda);
    CHECK(cst(xi) == cplx(2.5));
    CoadjointPoint off = xi;
    off.d = 2 * s.lambda;
    CHECK_THROWS_AS(phi_inverse(K, off, s.lambda), ChartError);
    off = xi;
    off.u2 = 2.0 * xi.u2;
    off.u2[0] += 1.0;
    CHECK_THROWS_AS(psi_inverse(K, off, s.lambda), ChartError);
    if (K.dim_k()) {
      off = xi;
      off.phi *= 1.5;
      off.phi[0] += 0.5;
      CHECK_THROWS_AS(phi_inverse(K, off, s.lambda), ChartError);
    }
  }
}

TEST_CASE("inverse W on operator-valued polynomial symbols") {
  for (const auto& s : setups()) {
    const SWCalculus sw(s);
    const CompactK& K = sw.group();
    CAPTURE(K.choice().name());
    const int dv = K.dim_v();
    for (const auto& X : MotionAlgElement::basis(K)) {
      const LieImage d = dsigma_image(K, X, s.lambda);
      const Poly f0 = wigner_dequantize(d.scalar);
      std::vector<std::vector<Poly>> f(dv, std::vector<Poly>(dv, Poly(2 * s.n)));
      for (int u = 0; u < dv; ++u)
        for (int v = 0; v < dv; ++v) {
          if (u == v) f[u][v] += f0;
          if (d.v_part(u, v) != cplx(0.0)) f[u][v] += Poly::constant(2 * s.n, d.v_part(u, v));
        }
      CHECK(max_abs_diff(schrodinger_sw_inverse(sw, f).m, dsigma_matrix(K, X, s.N, s.lambda).m) < 1e-12);
    }
  }
}

TEST_CASE("configuration errors") {
  SWSetup s;
  s.n = 2;
  CHECK_THROWS_AS(SWCalculus{s}, DimensionError);
  SWSetup t;
  t.quad_order = 10;
  CHECK_THROWS_AS(SWCalculus{t}, NumericError);
}
