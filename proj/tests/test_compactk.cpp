#include <cmath>
#include <random>

#include "doctest.h"
#include "stratweyl/compactk.hpp"
#include "stratweyl/linalg.hpp"
#include "test_util.hpp"

using namespace sw;

namespace {

double fact(int k) { return std::tgamma(k + 1.0); }

RVector random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  RVector u(3);
  u << nd(rng), nd(rng), nd(rng);
  return u.normalized();
}

CMatrix unvec(const CVector& v, int d) { return Eigen::Map<const CMatrix>(v.data(), d, d); }

}  // namespace

TEST_CASE("representations") {
  std::mt19937_64 rng(11);
  SUBCASE("torus character") {
    Eigen::VectorXi m(1);
    m << 2;
    CompactK K(CompactChoice::torus(m));
    CHECK(max_abs_diff(K.rho(CMatrix::Identity(1, 1)), CMatrix::Identity(1, 1)) == 0.0);
    for (double th : {0.3, -1.7, 3.0}) {
      CMatrix k = CMatrix::Constant(1, 1, std::exp(I * th));
      CHECK(std::abs(K.rho(k)(0, 0) - std::exp(2.0 * I * th)) < 1e-14);
    }
    Eigen::VectorXi m2(2);
    m2 << -1, 3;
    CompactK K2(CompactChoice::torus(m2));
    CMatrix k = CMatrix::Zero(2, 2);
    k(0, 0) = std::exp(I * 0.4);
    k(1, 1) = std::exp(I * -1.1);
    CHECK(std::abs(K2.rho(k)(0, 0) - std::exp(I * (-0.4 - 3.3))) < 1e-14);
    CHECK_THROWS_AS(K2.rho(CMatrix::Identity(2, 2) * 2.0), DimensionError);
  }
  SUBCASE("spin one half is the defining representation") {
    CompactK K(CompactChoice::su2(0.5));
    for (int r = 0; r < 3; ++r) CHECK(max_abs_diff(K.drho(K.algebra_basis()[r]), K.algebra_basis()[r]) < 1e-15);
    for (int t = 0; t < 20; ++t) {
      CMatrix k = K.random_element(rng);
      CHECK(K.is_member(k));
      CHECK(max_abs_diff(K.rho(k), k) < 1e-12);
    }
  }
  for (double j : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    CAPTURE(j);
    CompactK K(CompactChoice::su2(j));
    const auto& A = K.algebra_basis();
    // [A_1, A_2] = -A_3 and cyclic, on both sides of drho
    for (int r = 0; r < 3; ++r) {
      const int s = (r + 1) % 3, t = (r + 2) % 3;
      CHECK(max_abs_diff(A[r] * A[s] - A[s] * A[r], -A[t]) < 1e-15);
      const CMatrix br = K.drho(A[r]) * K.drho(A[s]) - K.drho(A[s]) * K.drho(A[r]);
      CHECK(max_abs_diff(br, -K.drho(A[t])) < 1e-13);
      CHECK(max_abs_diff(K.drho(A[r]).adjoint(), -K.drho(A[r])) < 1e-15);
    }
    for (int t = 0; t < 20; ++t) {
      const CMatrix a = K.random_algebra(rng, 2.0);
      CHECK(max_abs_diff(K.rho(K.exp(a)), exp_skew(K.drho(a))) < 1e-11);
      const CMatrix k1 = K.random_element(rng), k2 = K.random_element(rng);
      CHECK(max_abs_diff(K.rho(k1 * k2), K.rho(k1) * K.rho(k2)) < 1e-11);
      CHECK(max_abs_diff(K.rho(k1).adjoint() * K.rho(k1), CMatrix::Identity(K.dim_v(), K.dim_v())) < 1e-12);
    }
    // rho(-I) = (-1)^{2j}
    const double sign = (std::lround(2 * j) % 2) ? -1.0 : 1.0;
    CHECK(max_abs_diff(K.rho(-CMatrix::Identity(2, 2)), sign * CMatrix::Identity(K.dim_v(), K.dim_v())) < 1e-12);
  }
}

TEST_CASE("phi0 and the orbit") {
  std::mt19937_64 rng(12);
  SUBCASE("torus") {
    Eigen::VectorXi m(2);
    m << 3, -2;
    CompactK K(CompactChoice::torus(m));
    RVector th(2);
    th << 0.7, 1.9;
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 0) = I * th[0];
    a(1, 1) = I * th[1];
    CHECK(std::abs(K.pairing(K.phi0(), a) - (3 * 0.7 - 2 * 1.9)) < 1e-14);
    CHECK(std::abs(K.small_symbol(K.drho(a), K.orbit_point(K.exp(a))) - I * K.pairing(K.phi0(), a)) < 1e-14);
  }
  for (double j : {0.5, 1.0, 2.0}) {
    CAPTURE(j);
    CompactK K(CompactChoice::su2(j));
    const auto& A = K.algebra_basis();
    const CVector v = K.highest_weight_vector();
    CHECK(max_abs_diff(K.drho(A[2]) * v, I * j * v) < 1e-15);
    CHECK(std::abs(K.phi0()[2] - j) < 1e-15);
    // stabilizer of phi0 is the maximal torus exp(t A_3)
    CHECK((K.coadjoint(K.exp(0.8 * A[2]), K.phi0()) - K.phi0()).norm() < 1e-14);
    CHECK((K.coadjoint(K.exp(0.8 * A[0]), K.phi0()) - K.phi0()).norm() > 0.1);
    for (int t = 0; t < 50; ++t) {
      const RVector u = random_unit(rng);
      const OrbitPoint p = K.orbit_point_from_direction(u);
      CHECK((K.coadjoint(p.k, K.phi0()) - j * u).norm() < 1e-13);
      CHECK(std::abs(K.coherent_state(p).norm() - 1.0) < 1e-13);
      // fiber independence of s
      const OrbitPoint q{p.phi, p.k * K.exp(1.3 * A[2])};
      const CMatrix B = swtest::random_matrix(rng, K.dim_v(), K.dim_v());
      CHECK(std::abs(K.small_symbol(B, p) - K.small_symbol(B, q)) < 1e-12);
      CHECK(std::abs(K.small_symbol(B.adjoint(), p) - std::conj(K.small_symbol(B, p))) < 1e-13);
      CHECK(std::abs(K.small_symbol(B + B.adjoint(), p).imag()) < 1e-13);
      CHECK(std::abs(K.small_symbol(CMatrix::Identity(K.dim_v(), K.dim_v()), p) - 1.0) < 1e-14);
      for (int r = 0; r < 3; ++r)
        CHECK(std::abs(K.small_symbol(K.drho(A[r]), p) - I * K.pairing(p.phi, A[r])) < 1e-12);
    }
  }
  SUBCASE("antipode for spin one half") {
    CompactK K(CompactChoice::su2(0.5));
    RVector s(3);
    s << 0, 0, -1;
    const CVector e = K.coherent_state(K.orbit_point_from_direction(s));
    CHECK(std::abs(e[0]) < 1e-15);
    CHECK(std::abs(std::abs(e[1]) - 1.0) < 1e-15);
  }
}

TEST_CASE("s is injective") {
  std::mt19937_64 rng(13);
  for (double j : {0.5, 1.0, 1.5}) {
    CompactK K(CompactChoice::su2(j));
    const int d = K.dim_v();
    CMatrix F(d * d, d * d);
    for (int i = 0; i < d * d; ++i) {
      const OrbitPoint p = K.orbit_point_from_direction(random_unit(rng));
      for (int a = 0; a < d * d; ++a) {
        CVector e = CVector::Zero(d * d);
        e[a] = 1.0;
        F(i, a) = K.small_symbol(unvec(e, d), p);
      }
    }
    Eigen::JacobiSVD<CMatrix> svd(F);
    CHECK(svd.singularValues().minCoeff() > 1e-6 * svd.singularValues().maxCoeff());
  }
}

TEST_CASE("b and w") {
  std::mt19937_64 rng(14);
  SUBCASE("torus") {
    Eigen::VectorXi m(1);
    m << 1;
    SmallCalculus sc(CompactK(CompactChoice::torus(m)), 4);
    CHECK(std::abs(sc.gram()(0, 0) - 1.0) < 1e-15);
  }
  for (double j : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    CAPTURE(j);
    CompactK K(CompactChoice::su2(j));
    const SmallCalculus sc(K, 12);
    const int d = K.dim_v(), d2 = d * d;
    const CMatrix& G = sc.gram();
    CHECK(max_abs_diff(G, G.adjoint()) < 1e-14);
    // s^*(1) = I: nu has total mass dim V
    const CMatrix Id = CMatrix::Identity(d, d);
    CHECK(max_abs_diff(sc.b_preimage(Id), Id) < 1e-12);
    // isotypic decomposition of End(V) via the Casimir of the adjoint action
    CMatrix cas = CMatrix::Zero(d2, d2);
    const auto J = spin_matrices(j);
    for (int a = 0; a < d2; ++a) {
      CVector e = CVector::Zero(d2);
      e[a] = 1.0;
      const CMatrix B = unvec(e, d);
      CMatrix out = CMatrix::Zero(d, d);
      for (int r = 0; r < 3; ++r) {
        const CMatrix c1 = J[r] * B - B * J[r];
        out += J[r] * c1 - c1 * J[r];
      }
      cas.col(a) = Eigen::Map<const CVector>(out.data(), d2);
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (cas + cas.adjoint()));
    const CMatrix Giso = es.eigenvectors().adjoint() * G * es.eigenvectors();
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d2; ++b) {
        const double la = es.eigenvalues()[a], lb = es.eigenvalues()[b];
        if (std::abs(la - lb) > 0.5) CHECK(std::abs(Giso(a, b)) < 1e-12);
      }
    // eigenvalue on the spin-l block: (2j)!(2j+1)!/((2j+l+1)!(2j-l)!)
    const int tj = static_cast<int>(std::lround(2 * j));
    for (int a = 0; a < d2; ++a) {
      const int l = static_cast<int>(std::lround((-1 + std::sqrt(1 + 4 * es.eigenvalues()[a])) / 2));
      const double bl = fact(tj) * fact(tj + 1) / (fact(tj + l + 1) * fact(tj - l));
      CHECK(std::abs(Giso(a, a).real() - bl) < 1e-12);
    }
    // w^* w = I in both forms
    double worst = 0.0, worst_bil = 0.0;
    std::vector<CMatrix> wp;
    for (int a = 0; a < d2; ++a) {
      CVector e = CVector::Zero(d2);
      e[a] = 1.0;
      wp.push_back(sc.w_preimage(unvec(e, d)));
    }
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d2; ++b) {
        CVector ea = CVector::Zero(d2), eb = CVector::Zero(d2);
        ea[a] = 1.0;
        eb[b] = 1.0;
        const CMatrix Ea = unvec(ea, d), Eb = unvec(eb, d);
        cplx herm = 0.0;
        for (int i = 0; i < sc.rule().size(); ++i)
          herm += sc.rule().weights[i] * K.small_symbol(wp[a], sc.rule().points[i]) *
                  std::conj(K.small_symbol(wp[b], sc.rule().points[i]));
        worst = std::max(worst, std::abs(herm - (Ea * Eb.adjoint()).trace()));
        worst_bil = std::max(worst_bil, std::abs(sc.integrate_product(wp[a], wp[b]) - (Ea * Eb).trace()));
      }
    CHECK(worst < 1e-8);
    CHECK(worst_bil < 1e-8);
    CHECK(std::abs(sc.w(Id, K.orbit_point_from_direction(random_unit(rng))) - 1.0) < 1e-12);
    // b^{1/2} w = s
    const CMatrix B = swtest::random_matrix(rng, d, d);
    CHECK(max_abs_diff(sc.b_half_preimage(sc.w_preimage(B)), B) < 1e-12);
    // covariance of w
    for (int t = 0; t < 10; ++t) {
      const CMatrix k = K.random_element(rng);
      const OrbitPoint p = K.orbit_point_from_direction(random_unit(rng));
      const OrbitPoint kp = K.orbit_point(k * p.k);
      CHECK((kp.phi - K.coadjoint(k, p.phi)).norm() < 1e-12);
      const CMatrix rk = K.rho(k);
      CHECK(std::abs(sc.w(rk.adjoint() * B * rk, p) - sc.w(B, kp)) < 1e-11);
    }
  }
  SUBCASE("coarse orbit rule loses positivity") {
    CHECK_THROWS_AS(SmallCalculus(CompactK(CompactChoice::su2(2.0)), 1), NumericError);
  }
}
