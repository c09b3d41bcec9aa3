#include "stratweyl/weyl.hpp"

#include <cmath>

#include "stratweyl/hermite.hpp"
#include "stratweyl/linalg.hpp"

namespace sw {

PhaseSymbol::PhaseSymbol(int n_, double lambda_, Poly p, bool gaussian_)
    : n(n_), lambda(lambda_), poly(std::move(p)), gaussian(gaussian_) {
  if (poly.nvars() != 2 * n) throw DimensionError("PhaseSymbol: polynomial must have 2n variables");
}

cplx PhaseSymbol::evaluate(const RVector& p, const RVector& q) const {
  if (p.size() != n || q.size() != n) throw DimensionError("PhaseSymbol::evaluate: point dimension");
  std::vector<cplx> pt(2 * n);
  for (int k = 0; k < n; ++k) {
    pt[k] = p[k];
    pt[n + k] = q[k];
  }
  cplx v = poly.evaluate(pt);
  if (gaussian) v *= std::exp(-lambda * p.squaredNorm() - q.squaredNorm() / lambda);
  return v;
}

PhaseSymbol PhaseSymbol::conj() const {
  Poly c(2 * n);
  for (const auto& [e, v] : poly.terms()) c.add_term(e, std::conj(v));
  return {n, lambda, c, gaussian};
}

HeisCoadjPoint psi_lambda(const RVector& p, const RVector& q, double lambda) {
  if (p.size() != q.size()) throw DimensionError("psi_lambda: dimension mismatch");
  return {q, -lambda * p, lambda};
}

void h_act_phase(const HeisElement& g, RVector& p, RVector& q, double lambda) {
  if (p.size() != g.n() || q.size() != g.n()) throw DimensionError("h_act_phase: dimension mismatch");
  p += g.a;
  q += lambda * g.b;
}

DiffOp weyl_quantize_poly(const Poly& f) {
  if (f.nvars() % 2) throw DimensionError("weyl_quantize_poly: need 2n variables");
  const int n = f.nvars() / 2;
  DiffOp out(n);
  for (const auto& [e, c] : f.terms()) {
    const auto [a, b] = split_exponent(e);
    // Per coordinate: i^{b} sum_g C(b, g) a!/(a-g)! 2^{-g} x^{a-g} d^{b-g}.
    std::vector<std::vector<std::pair<int, double>>> per(n);
    for (int k = 0; k < n; ++k)
      for (int g = 0; g <= std::min(a[k], b[k]); ++g)
        per[k].emplace_back(g, binomial(b[k], g) * factorial(a[k]) / factorial(a[k] - g) * std::pow(0.5, g));
    const cplx phase = c * ipow(I, total_degree(b));
    std::vector<int> pick(n, 0);
    MultiIndex ma(n), mb(n);
    while (true) {
      double w = 1.0;
      for (int k = 0; k < n; ++k) {
        const auto [g, wk] = per[k][pick[k]];
        w *= wk;
        ma[k] = a[k] - g;
        mb[k] = b[k] - g;
      }
      out += DiffOp::term(ma, mb, phase * w);
      int k = n - 1;
      for (; k >= 0; --k) {
        if (++pick[k] < static_cast<int>(per[k].size())) break;
        pick[k] = 0;
      }
      if (k < 0) break;
    }
  }
  return out;
}

namespace {

// Average over all words with `a` letters X and `b` letters Q.
DiffOp symmetrized_1d(int n, int k, int a, int b) {
  const DiffOp X = DiffOp::mult(n, k), Q = DiffOp::deriv(n, k, I);
  DiffOp sum(n);
  int count = 0;
  const int len = a + b;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    if (__builtin_popcount(mask) != a) continue;
    DiffOp w = DiffOp::identity(n);
    for (int i = 0; i < len; ++i) w = w * ((mask >> i) & 1u ? X : Q);
    sum += w;
    ++count;
  }
  return (1.0 / count) * sum;
}

}  // namespace

DiffOp weyl_quantize_symmetrized(const Poly& f) {
  if (f.nvars() % 2) throw DimensionError("weyl_quantize_symmetrized: need 2n variables");
  const int n = f.nvars() / 2;
  DiffOp out(n);
  for (const auto& [e, c] : f.terms()) {
    const auto [a, b] = split_exponent(e);
    if (total_degree(a) + total_degree(b) > 20) throw DimensionError("weyl_quantize_symmetrized: degree too large");
    DiffOp t = DiffOp::identity(n, c);
    for (int k = 0; k < n; ++k) t = t * symmetrized_1d(n, k, a[k], b[k]);
    out += t;
  }
  return out;
}

Poly wigner_dequantize(const DiffOp& d) {
  const int n = d.n();
  Poly out(2 * n);
  for (const auto& [e, c] : d.coefficients().terms()) {
    const auto [a, b] = split_exponent(e);
    // x^a d^b -> sum_g C(b, g) a!/(a-g)! (-1/2)^g p^{a-g} (-i q)^{b-g}, per coordinate.
    Poly t = Poly::constant(2 * n, c);
    for (int k = 0; k < n; ++k) {
      Poly f(2 * n);
      for (int g = 0; g <= std::min(a[k], b[k]); ++g) {
        MultiIndex m(2 * n, 0);
        m[k] = a[k] - g;
        m[n + k] = b[k] - g;
        f.add_term(m, binomial(b[k], g) * factorial(a[k]) / factorial(a[k] - g) * std::pow(-0.5, g) * ipow(-I, b[k] - g));
      }
      t = t * f;
    }
    out += t;
  }
  return out;
}

namespace {

// Monomial coefficients of h_j(x) e^{lambda x^2 / 2}, j <= kmax.
std::vector<std::vector<double>> hermite_monomials(int kmax, double lambda) {
  std::vector<std::vector<double>> P(kmax + 1);
  P[0] = {std::pow(lambda / kPi, 0.25)};
  const double s2l = std::sqrt(2 * lambda);
  for (int k = 0; k < kmax; ++k) {
    std::vector<double> nx(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) nx[i + 1] += s2l * P[k][i];
    if (k > 0)
      for (int i = 0; i < k; ++i) nx[i] -= std::sqrt(double(k)) * P[k - 1][i];
    for (auto& v : nx) v /= std::sqrt(k + 1.0);
    P[k + 1] = nx;
  }
  return P;
}

// One coordinate: poly in (u, q) with W(u,q) = poly * e^{-lambda u^2 - q^2/lambda}.
std::map<std::pair<int, int>, cplx> wigner_rank_one_1d(int j, int l, double lambda) {
  const auto P = hermite_monomials(std::max(j, l), lambda);
  // P_j(u - s/2) P_l(u + s/2) = sum c(r, m) u^r s^m
  auto shifted = [](const std::vector<double>& p, double sign) {
    std::map<std::pair<int, int>, double> out;
    for (int d = 0; d < static_cast<int>(p.size()); ++d)
      for (int m = 0; m <= d; ++m) out[{d - m, m}] += p[d] * binomial(d, m) * std::pow(sign * 0.5, m);
    return out;
  };
  const auto A = shifted(P[j], -1.0), B = shifted(P[l], 1.0);
  std::map<std::pair<int, int>, double> c;
  for (const auto& [ea, va] : A)
    for (const auto& [eb, vb] : B) c[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
  int mmax = 0;
  for (const auto& [e, v] : c) mmax = std::max(mmax, e.second);
  // int s^m e^{-lambda s^2/4 - isq} ds = 2 sqrt(pi/lambda) Q_m(q) e^{-q^2/lambda},
  // Q_0 = 1, Q_{m+1} = i (Q_m' - (2q/lambda) Q_m).
  std::vector<std::vector<cplx>> Q(mmax + 1);
  Q[0] = {1.0};
  for (int m = 0; m < mmax; ++m) {
    std::vector<cplx> nx(Q[m].size() + 1, 0.0);
    for (int i = 1; i < static_cast<int>(Q[m].size()); ++i) nx[i - 1] += I * double(i) * Q[m][i];
    for (int i = 0; i < static_cast<int>(Q[m].size()); ++i) nx[i + 1] += -I * (2.0 / lambda) * Q[m][i];
    Q[m + 1] = nx;
  }
  const double pref = 2.0 * std::sqrt(kPi / lambda);
  std::map<std::pair<int, int>, cplx> out;
  for (const auto& [e, v] : c)
    for (int i = 0; i < static_cast<int>(Q[e.second].size()); ++i)
      if (Q[e.second][i] != cplx(0.0)) out[{e.first, i}] += pref * v * Q[e.second][i];
  return out;
}

}  // namespace

PhaseSymbol wigner_rank_one(const MultiIndex& a, const MultiIndex& b, double lambda) {
  if (a.size() != b.size()) throw DimensionError("wigner_rank_one: index length mismatch");
  const int n = static_cast<int>(a.size());
  Poly out = Poly::constant(2 * n, 1.0);
  for (int k = 0; k < n; ++k) {
    Poly f(2 * n);
    for (const auto& [e, v] : wigner_rank_one_1d(a[k], b[k], lambda)) {
      MultiIndex m(2 * n, 0);
      m[k] = e.first;
      m[n + k] = e.second;
      f.add_term(m, v);
    }
    out = out * f;
  }
  return {n, lambda, out, true};
}

PhaseSymbol wigner_exact(const CMatrix& a, const Basis& basis, int max_index) {
  if (basis.kind != BasisKind::Hermite || basis.dim_v != 1) throw DimensionError("wigner_exact: scalar Hermite basis required");
  if (a.rows() != basis.size() || a.cols() != basis.size()) throw DimensionError("wigner_exact: size mismatch");
  const auto& set = basis.indices();
  const int lim = set.prefix_size(std::min(max_index, basis.max_degree));
  Poly out(2 * basis.n);
  for (int i = 0; i < lim; ++i)
    for (int j = 0; j < lim; ++j) {
      if (a(i, j) == cplx(0.0)) continue;
      Poly t = wigner_rank_one(set[i], set[j], basis.lambda).poly;
      t *= a(i, j);
      out += t;
    }
  return {basis.n, basis.lambda, out, true};
}

CMatrix wigner_table_1d(int kmax, double lambda, double p, double q, const QuadratureRule& rule) {
  // s = 2t / sqrt(lambda): h_j(p - s/2) h_l(p + s/2) = hat_j hat_l e^{-lambda p^2 - t^2}.
  const double sl = std::sqrt(lambda);
  CMatrix t = CMatrix::Zero(kmax + 1, kmax + 1);
  for (int m = 0; m < rule.order(); ++m) {
    const double s = 2.0 * rule.nodes[m] / sl;
    const auto hm = hermite_poly_table(kmax, lambda, p - s / 2);
    const auto hp = hermite_poly_table(kmax, lambda, p + s / 2);
    const cplx w = rule.weights[m] * std::exp(-I * s * q);
    for (int j = 0; j <= kmax; ++j) {
      const cplx wj = w * hm[j];
      for (int l = 0; l <= kmax; ++l) t(j, l) += wj * hp[l];
    }
  }
  return t * (2.0 / sl * std::exp(-lambda * p * p));
}

WignerEvaluator::WignerEvaluator(OperatorMatrix a, int quad_order) : a_(std::move(a)), rule_(gauss_hermite(quad_order)) {
  if (a_.basis.kind != BasisKind::Hermite) throw DimensionError("WignerEvaluator: Hermite basis required");
  if (quad_order < min_quadrature_order(a_.basis.max_degree)) throw NumericError("WignerEvaluator: quadrature order below N + 16");
}

CMatrix WignerEvaluator::value(const RVector& p, const RVector& q) const {
  const Basis& b = a_.basis;
  if (p.size() != b.n || q.size() != b.n) throw DimensionError("WignerEvaluator: point dimension");
  std::vector<CMatrix> tabs;
  for (int k = 0; k < b.n; ++k) tabs.push_back(wigner_table_1d(b.max_degree, b.lambda, p[k], q[k], rule_));
  const auto& set = b.indices();
  const int M = set.size(), dv = b.dim_v;
  CMatrix out = CMatrix::Zero(dv, dv);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      cplx w = 1.0;
      for (int k = 0; k < b.n; ++k) w *= tabs[k](set[i][k], set[j][k]);
      out += w * a_.m.block(i * dv, j * dv, dv, dv);
    }
  return out;
}

cplx WignerEvaluator::scalar_value(const RVector& p, const RVector& q) const {
  if (a_.basis.dim_v != 1) throw DimensionError("WignerEvaluator::scalar_value: operator is End(V)-valued");
  return value(p, q)(0, 0);
}

OperatorMatrix weyl_quantize_opvalued(const std::vector<std::vector<Poly>>& f, const Basis& basis) {
  const int dv = static_cast<int>(f.size());
  if (dv != basis.dim_v) throw DimensionError("weyl_quantize_opvalued: block count must equal dim V");
  const Basis sb = basis.scalar();
  CMatrix out = CMatrix::Zero(basis.size(), basis.size());
  for (int u = 0; u < dv; ++u) {
    if (static_cast<int>(f[u].size()) != dv) throw DimensionError("weyl_quantize_opvalued: symbol matrix must be square");
    for (int v = 0; v < dv; ++v) {
      if (f[u][v].empty()) continue;
      CMatrix e = CMatrix::Zero(dv, dv);
      e(u, v) = 1.0;
      out += kron(materialize(weyl_quantize_poly(f[u][v]), sb).m, e);
    }
  }
  return {basis, out};
}

}  // namespace sw
