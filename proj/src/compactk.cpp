#include "stratweyl/compactk.hpp"

#include <cmath>

#include "stratweyl/linalg.hpp"
#include "stratweyl/quadrature.hpp"

namespace sw {

CompactChoice CompactChoice::trivial(int n) {
  CompactChoice c;
  c.kind = KKind::Trivial;
  c.n = n;
  return c;
}

CompactChoice CompactChoice::torus(const Eigen::VectorXi& weights) {
  CompactChoice c;
  c.kind = KKind::Torus;
  c.n = static_cast<int>(weights.size());
  c.m = weights;
  return c;
}

CompactChoice CompactChoice::su2(double spin) {
  if (spin < 0 || std::abs(2 * spin - std::round(2 * spin)) > 1e-12) throw DimensionError("su2: spin must be a non-negative half-integer");
  CompactChoice c;
  c.kind = KKind::SU2;
  c.n = 2;
  c.j = spin;
  return c;
}

int CompactChoice::dim_v() const { return kind == KKind::SU2 ? static_cast<int>(std::lround(2 * j)) + 1 : 1; }

int CompactChoice::dim_k() const {
  switch (kind) {
    case KKind::Trivial: return 0;
    case KKind::Torus: return n;
    case KKind::SU2: return 3;
  }
  return 0;
}

std::string CompactChoice::name() const {
  switch (kind) {
    case KKind::Trivial: return "trivial";
    case KKind::Torus: return "torus";
    case KKind::SU2: return "su2";
  }
  return "";
}

std::vector<CMatrix> spin_matrices(double j) {
  const int d = static_cast<int>(std::lround(2 * j)) + 1;
  CMatrix jp = CMatrix::Zero(d, d), j3 = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    j3(i, i) = m;
    // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> has index i-1
    if (i > 0) jp(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const CMatrix jm = jp.adjoint();
  return {(jp + jm) / 2.0, (jp - jm) / (2.0 * I), j3};
}

CMatrix exp_skew(const CMatrix& a) {
  const CMatrix h = -I * a;  // Hermitian
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()));
  CVector e(es.eigenvalues().size());
  for (int i = 0; i < e.size(); ++i) e[i] = std::exp(I * es.eigenvalues()[i]);
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

CompactK::CompactK(CompactChoice c) : c_(std::move(c)) {
  const int n = c_.n;
  if (n < 1) throw DimensionError("CompactK: n must be positive");
  switch (c_.kind) {
    case KKind::Trivial: break;
    case KKind::Torus:
      for (int r = 0; r < n; ++r) {
        CMatrix a = CMatrix::Zero(n, n);
        a(r, r) = I;
        basis_.push_back(a);
        drho_basis_.push_back(CMatrix::Constant(1, 1, I * double(c_.m[r])));
      }
      break;
    case KKind::SU2: {
      if (n != 2) throw DimensionError("CompactK: su2 requires n = 2");
      CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
      s1 << 0, 1, 1, 0;
      s2 << 0, -I, I, 0;
      s3 << 1, 0, 0, -1;
      basis_ = {0.5 * I * s1, 0.5 * I * s2, 0.5 * I * s3};
      for (const auto& jr : spin_matrices(c_.j)) drho_basis_.push_back(I * jr);
      break;
    }
  }
  const int dk = dim_k();
  RMatrix g(dk, dk);
  for (int r = 0; r < dk; ++r)
    for (int s = 0; s < dk; ++s) g(r, s) = (basis_[r].adjoint() * basis_[s]).trace().real();
  basis_gram_inv_ = dk ? RMatrix(g.inverse()) : RMatrix();
}

RVector CompactK::coords(const CMatrix& a) const {
  const int dk = dim_k();
  RVector rhs(dk);
  for (int r = 0; r < dk; ++r) rhs[r] = (basis_[r].adjoint() * a).trace().real();
  return dk ? RVector(basis_gram_inv_ * rhs) : RVector();
}

CMatrix CompactK::from_coords(const RVector& x) const {
  if (x.size() != dim_k()) throw DimensionError("CompactK::from_coords: wrong length");
  CMatrix a = CMatrix::Zero(n(), n());
  for (int r = 0; r < dim_k(); ++r) a += x[r] * basis_[r];
  return a;
}

bool CompactK::is_member(const CMatrix& k, double tol) const {
  const int n_ = n();
  if (k.rows() != n_ || k.cols() != n_) return false;
  switch (c_.kind) {
    case KKind::Trivial: return max_abs_diff(k, CMatrix::Identity(n_, n_)) <= tol;
    case KKind::Torus:
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (i != j && std::abs(k(i, j)) > tol) return false;
      for (int i = 0; i < n_; ++i)
        if (std::abs(std::abs(k(i, i)) - 1.0) > tol) return false;
      return true;
    case KKind::SU2:
      return max_abs_diff(k.adjoint() * k, CMatrix::Identity(2, 2)) <= tol && std::abs(k.determinant() - 1.0) <= tol;
  }
  return false;
}

bool CompactK::is_algebra(const CMatrix& a, double tol) const {
  if (a.rows() != n() || a.cols() != n()) return false;
  return max_abs_diff(from_coords(coords(a)), a) <= tol;
}

void CompactK::require_member(const CMatrix& k) const {
  if (!is_member(k, 1e-10)) throw DimensionError("CompactK: element is not in K");
}

CMatrix CompactK::exp(const CMatrix& a) const {
  if (!is_algebra(a, 1e-10)) throw DimensionError("CompactK::exp: element is not in the Lie algebra of K");
  return exp_skew(a);
}

RVector CompactK::log_coords(const CMatrix& k) const {
  require_member(k);
  switch (c_.kind) {
    case KKind::Trivial: return RVector();
    case KKind::Torus: {
      RVector x(n());
      for (int r = 0; r < n(); ++r) x[r] = std::arg(k(r, r));
      return x;
    }
    case KKind::SU2: {
      // k = cos(t/2) + i sin(t/2) m.sigma; sin(t/2) m = (Im beta, -Re beta, Im alpha)
      const cplx alpha = k(0, 0), beta = k(1, 0);
      RVector v(3);
      v << beta.imag(), -beta.real(), alpha.imag();
      const double sn = v.norm();
      const double half = std::atan2(sn, alpha.real());
      if (sn < 1e-300) {
        RVector x = RVector::Zero(3);
        x[2] = 2 * half;  // k = +-I: rotation about e3
        return x;
      }
      return (2 * half / sn) * v;
    }
  }
  return RVector();
}

CMatrix CompactK::rho(const CMatrix& k) const {
  require_member(k);
  switch (c_.kind) {
    case KKind::Trivial: return CMatrix::Identity(1, 1);
    case KKind::Torus: {
      cplx v = 1.0;
      for (int r = 0; r < n(); ++r) {
        const cplx u = k(r, r) / std::abs(k(r, r));
        const int m = c_.m[r];
        v *= ipow(m >= 0 ? u : std::conj(u), std::abs(m));
      }
      return CMatrix::Constant(1, 1, v);
    }
    case KKind::SU2: {
      const RVector x = log_coords(k);
      CMatrix a = CMatrix::Zero(dim_v(), dim_v());
      for (int r = 0; r < 3; ++r) a += x[r] * drho_basis_[r];
      return exp_skew(a);
    }
  }
  return CMatrix();
}

CMatrix CompactK::drho(const CMatrix& a) const {
  if (trivial()) return CMatrix::Zero(1, 1);
  if (!is_algebra(a, 1e-10)) throw DimensionError("CompactK::drho: element is not in the Lie algebra of K");
  const RVector x = coords(a);
  CMatrix out = CMatrix::Zero(dim_v(), dim_v());
  for (int r = 0; r < dim_k(); ++r) out += x[r] * drho_basis_[r];
  return out;
}

RVector CompactK::coadjoint(const CMatrix& k, const RVector& phi) const {
  if (phi.size() != dim_k()) throw DimensionError("CompactK::coadjoint: wrong length");
  RVector out(dim_k());
  const CMatrix kinv = k.adjoint();
  for (int r = 0; r < dim_k(); ++r) out[r] = phi.dot(coords(kinv * basis_[r] * k));
  return out;
}

RVector CompactK::phi0() const {
  switch (c_.kind) {
    case KKind::Trivial: return RVector();
    case KKind::Torus: return c_.m.cast<double>();
    case KKind::SU2: {
      RVector p = RVector::Zero(3);
      p[2] = c_.j;
      return p;
    }
  }
  return RVector();
}

CVector CompactK::highest_weight_vector() const {
  CVector v = CVector::Zero(dim_v());
  v[0] = 1.0;
  return v;
}

OrbitPoint CompactK::orbit_point(const CMatrix& k) const {
  require_member(k);
  return {coadjoint(k, phi0()), k};
}

OrbitPoint CompactK::orbit_point_from_direction(const RVector& u) const {
  if (c_.kind != KKind::SU2) throw DimensionError("orbit_point_from_direction: su2 only");
  if (u.size() != 3 || std::abs(u.norm() - 1.0) > 1e-12) throw DimensionError("orbit_point_from_direction: unit vector in R^3 required");
  const double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
  RVector axis(3);
  axis << -u[1], u[0], 0.0;  // e3 x u
  if (axis.norm() < 1e-14) axis << 1.0, 0.0, 0.0;
  axis.normalize();
  const CMatrix k = exp_skew(from_coords(-theta * axis));
  return {c_.j * u, k};
}

CVector CompactK::coherent_state(const OrbitPoint& p) const { return rho(p.k) * highest_weight_vector(); }

cplx CompactK::small_symbol(const CMatrix& b, const OrbitPoint& p) const {
  if (b.rows() != dim_v() || b.cols() != dim_v()) throw DimensionError("small_symbol: operator size must be dim V");
  if (dim_v() == 1) return b(0, 0);
  const CVector e = coherent_state(p);
  return e.dot(b * e) / e.squaredNorm();
}

OrbitPoint CompactK::orbit_point_from_phi(const RVector& phi, double tol) const {
  if (phi.size() != dim_k()) throw ChartError("orbit_point_from_phi: coordinate count differs from dim k");
  if (c_.kind != KKind::SU2) {
    // Abelian (or trivial) K: the orbit is the single point phi0.
    if ((phi - phi0()).norm() > tol) throw ChartError("orbit_point_from_phi: point is not on the orbit of phi0");
    return orbit_point(CMatrix::Identity(n(), n()));
  }
  if (std::abs(phi.norm() - c_.j) > tol * std::max(1.0, c_.j)) throw ChartError("orbit_point_from_phi: |phi| differs from j");
  return orbit_point_from_direction(phi / phi.norm());
}

OrbitRule CompactK::orbit_rule(int order) const {
  OrbitRule r;
  if (c_.kind != KKind::SU2) {
    const CMatrix e = CMatrix::Identity(n(), n());
    r.points.push_back(orbit_point(e));
    r.weights.push_back(dim_v());
    return r;
  }
  const QuadratureRule gl = gauss_legendre(order);
  const int M = 2 * order;
  const double mass = dim_v();
  for (int i = 0; i < gl.order(); ++i) {
    const double ct = gl.nodes[i], st = std::sqrt(std::max(0.0, 1 - ct * ct));
    for (int m = 0; m < M; ++m) {
      const double ph = 2 * kPi * m / M;
      RVector u(3);
      u << st * std::cos(ph), st * std::sin(ph), ct;
      r.points.push_back(orbit_point_from_direction(u));
      // normalized area element: d(cos t) d(phi) / (4 pi)
      r.weights.push_back(mass * gl.weights[i] * (2 * kPi / M) / (4 * kPi));
    }
  }
  return r;
}

CMatrix CompactK::random_element(std::mt19937_64& rng) const {
  return trivial() ? CMatrix(CMatrix::Identity(n(), n())) : exp_skew(random_algebra(rng, kPi));
}

CMatrix CompactK::random_algebra(std::mt19937_64& rng, double scale) const {
  std::uniform_real_distribution<double> u(-scale, scale);
  RVector x(dim_k());
  for (int r = 0; r < dim_k(); ++r) x[r] = u(rng);
  return from_coords(x);
}

SmallCalculus::SmallCalculus(const CompactK& k, int orbit_order) : k_(k), rule_(k.orbit_rule(orbit_order)) {
  const int d = k_.dim_v(), d2 = d * d;
  // F(i, a) = s(E_a)(phi_i) with E_a the matrix units (column-major).
  CMatrix F(rule_.size(), d2);
  for (int i = 0; i < rule_.size(); ++i) {
    const CVector e = k_.coherent_state(rule_.points[i]);
    for (int v = 0; v < d; ++v)
      for (int u = 0; u < d; ++u) F(i, u + v * d) = std::conj(e[u]) * e[v];
  }
  // G_ab = int s(E_b) conj(s(E_a)) dnu
  CMatrix W = CMatrix::Zero(rule_.size(), rule_.size());
  for (int i = 0; i < rule_.size(); ++i) W(i, i) = rule_.weights[i];
  gram_ = F.adjoint() * W * F;
  gram_ = 0.5 * (gram_ + gram_.adjoint());
  if (d == 1) {
    // Mass dim V = 1 makes G = 1 exactly; keep w and b exact identities.
    gram_ = gram_inv_sqrt_ = gram_sqrt_ = CMatrix::Identity(1, 1);
    return;
  }
  gram_inv_sqrt_ = psd_inv_sqrt(gram_, 1e-10);
  gram_sqrt_ = psd_sqrt(gram_, 1e-10);
}

CMatrix SmallCalculus::apply_vec(const CMatrix& op, const CMatrix& b) const {
  const int d = k_.dim_v();
  if (b.rows() != d || b.cols() != d) throw DimensionError("SmallCalculus: operator size must be dim V");
  const CVector v = op * Eigen::Map<const CVector>(b.data(), d * d);
  return Eigen::Map<const CMatrix>(v.data(), d, d);
}

CMatrix SmallCalculus::w_preimage(const CMatrix& b) const { return apply_vec(gram_inv_sqrt_, b); }
CMatrix SmallCalculus::b_preimage(const CMatrix& b) const { return apply_vec(gram_, b); }
CMatrix SmallCalculus::b_half_preimage(const CMatrix& b) const { return apply_vec(gram_sqrt_, b); }

cplx SmallCalculus::integrate_product(const CMatrix& f, const CMatrix& g) const {
  cplx s = 0.0;
  for (int i = 0; i < rule_.size(); ++i) s += rule_.weights[i] * k_.small_symbol(f, rule_.points[i]) * k_.small_symbol(g, rule_.points[i]);
  return s;
}

}  // namespace sw
