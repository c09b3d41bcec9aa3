#include "stratweyl/berezin0.hpp"

#include <cmath>

#include "stratweyl/fock.hpp"
#include "stratweyl/quadrature.hpp"

namespace sw {

PolySymbol::PolySymbol(int n_, Poly p) : n(n_), poly(std::move(p)) {
  if (poly.nvars() != 2 * n) throw DimensionError("PolySymbol: polynomial must have 2n variables");
}

cplx PolySymbol::evaluate(const CVector& z) const {
  if (z.size() != n) throw DimensionError("PolySymbol::evaluate: point dimension");
  std::vector<cplx> pt(2 * n);
  for (int k = 0; k < n; ++k) {
    pt[k] = z[k];
    pt[n + k] = std::conj(z[k]);
  }
  return poly.evaluate(pt);
}

PolySymbol PolySymbol::conj() const {
  Poly c(2 * n);
  for (const auto& [e, v] : poly.terms()) {
    const auto [a, b] = split_exponent(e);
    MultiIndex f(b);
    f.insert(f.end(), a.begin(), a.end());
    c.add_term(f, std::conj(v));
  }
  return {n, c};
}

PolySymbol PolySymbol::constant(int n, cplx c) { return {n, Poly::constant(2 * n, c)}; }

PolySymbol PolySymbol::z_zbar(int n, int k) {
  MultiIndex e(2 * n, 0);
  e[k] = 1;
  e[n + k] = 1;
  return {n, Poly::monomial(e)};
}

GaussPolySymbol::GaussPolySymbol(PolySymbol p, double rate_) : poly(std::move(p)), rate(rate_) {
  if (rate < 0.0) throw DimensionError("GaussPolySymbol: rate must be non-negative");
}

cplx GaussPolySymbol::evaluate(const CVector& z) const {
  cplx v = poly.evaluate(z);
  if (rate != 0.0) v *= std::exp(-rate * z.squaredNorm());
  return v;
}

double max_coeff_diff(const GaussPolySymbol& a, const GaussPolySymbol& b) {
  if (std::abs(a.rate - b.rate) > 1e-15 * std::max(1.0, a.rate)) throw DimensionError("max_coeff_diff: Gaussian rates differ");
  return a.poly.poly.max_coeff_diff(b.poly.poly);
}

GaussPolySymbol berezin_symbol0(const OperatorMatrix& a) {
  const Basis& b = a.basis;
  if (b.kind != BasisKind::Fock || b.dim_v != 1) throw DimensionError("berezin_symbol0: scalar Fock matrix required");
  const auto& set = b.indices();
  const int n = b.n;
  Poly p(2 * n);
  std::vector<double> nrm(set.size());
  for (int i = 0; i < set.size(); ++i) nrm[i] = std::sqrt(fock_norm_sq(set[i], b.lambda));
  MultiIndex e(2 * n);
  for (int i = 0; i < set.size(); ++i)
    for (int j = 0; j < set.size(); ++j) {
      if (a.m(i, j) == cplx(0.0)) continue;
      for (int k = 0; k < n; ++k) {
        e[k] = set[i][k];
        e[n + k] = set[j][k];
      }
      p.add_term(e, a.m(i, j) / (nrm[i] * nrm[j]));
    }
  return {{n, p}, 1.0 / (2 * b.lambda)};
}

PolySymbol berezin_symbol0(const DiffOp& d, double lambda) {
  const int n = d.n();
  Poly p(2 * n);
  for (const auto& [e, c] : d.coefficients().terms()) {
    const auto [a, b] = split_exponent(e);
    p.add_term(e, c / std::pow(2 * lambda, total_degree(b)));
  }
  return {n, p};
}

cplx berezin_symbol0_at(const OperatorMatrix& a, const CVector& z) {
  const Basis& b = a.basis;
  if (b.kind != BasisKind::Fock || b.dim_v != 1) throw DimensionError("berezin_symbol0_at: scalar Fock matrix required");
  const FockVector ez = coherent_state(z, b.max_degree, b.lambda);
  return ez.coeffs.dot(a.m * ez.coeffs) / ez.coeffs.squaredNorm();
}

namespace {

// int z^a conj(z)^b z^beta conj(z)^alpha e^{-R |z|^2} dmu_lambda over C^n.
double gaussian_moment(const MultiIndex& a, const MultiIndex& b, const MultiIndex& beta, const MultiIndex& alpha,
                       double R, double lambda) {
  double v = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int m = a[k] + beta[k];
    if (m != b[k] + alpha[k]) return 0.0;
    v *= factorial(m) / (2 * lambda * std::pow(R, m + 1));
  }
  return v;
}

}  // namespace

OperatorMatrix berezin_adjoint0(const GaussPolySymbol& f, const Basis& basis) {
  if (basis.kind != BasisKind::Fock || basis.dim_v != 1) throw DimensionError("berezin_adjoint0: scalar Fock basis required");
  if (f.n() != basis.n) throw DimensionError("berezin_adjoint0: dimension mismatch");
  const auto& set = basis.indices();
  const int M = set.size();
  const double lam = basis.lambda;
  const double R = f.rate + 1.0 / (2 * lam);
  std::vector<double> nrm(M);
  for (int i = 0; i < M; ++i) nrm[i] = std::sqrt(fock_norm_sq(set[i], lam));
  CMatrix m = CMatrix::Zero(M, M);
  for (const auto& [e, c] : f.poly.poly.terms()) {
    const auto [a, b] = split_exponent(e);
    for (int al = 0; al < M; ++al)
      for (int be = 0; be < M; ++be) {
        const double g = gaussian_moment(a, b, set[be], set[al], R, lam);
        if (g != 0.0) m(al, be) += c * g / (nrm[al] * nrm[be]);
      }
  }
  return {basis, std::move(m)};
}

HeisCoadjPoint phi_lambda(const CVector& z, double lambda) { return {z.real(), z.imag(), lambda}; }

GaussPolySymbol heat_flow(const GaussPolySymbol& f, double t) {
  const double a = f.rate;
  if (t == 0.0) return f;
  if (a > 0.0 && t < 0.0) throw NumericError("heat_flow: backward heat flow on a Gaussian symbol");
  const int n = f.n();
  // s = 1 / (1 + 4ta), b = a + 1/(4t); z^al zb^be -> sum_g C(al,g) C(be,g) g! b^{-|g|} s^{|al|+|be|-2|g|} z^{al-g} zb^{be-g}
  const double s = 1.0 / (1.0 + 4 * t * a);
  const double binv = 4 * t * s;  // 1 / b
  Poly out(2 * n);
  MultiIndex e(2 * n);
  for (const auto& [ex, c] : f.poly.poly.terms()) {
    const auto [al, be] = split_exponent(ex);
    std::vector<int> g(n, 0);
    while (true) {
      double w = 1.0;
      for (int k = 0; k < n; ++k) {
        w *= binomial(al[k], g[k]) * binomial(be[k], g[k]) * factorial(g[k]) * std::pow(binv, g[k]) *
             std::pow(s, al[k] + be[k] - 2 * g[k]);
        e[k] = al[k] - g[k];
        e[n + k] = be[k] - g[k];
      }
      out.add_term(e, c * w);
      int k = n - 1;
      for (; k >= 0; --k) {
        if (++g[k] <= std::min(al[k], be[k])) break;
        g[k] = 0;
      }
      if (k < 0) break;
    }
  }
  out *= std::pow(s, n);
  return {{n, out}, a * s};
}

PolySymbol heat_flow(const PolySymbol& f, double t) { return heat_flow(GaussPolySymbol(f, 0.0), t).poly; }

PolySymbol berezin_transform0(const PolySymbol& f, double lambda) { return heat_flow(f, lambda / 2); }

GaussPolySymbol berezin_transform0(const GaussPolySymbol& f, double lambda) { return heat_flow(f, lambda / 2); }

cplx berezin_transform0_integral(const std::function<cplx(const CVector&)>& f, double f_rate, const CVector& z,
                                 double lambda, int quad_order) {
  const int n = static_cast<int>(z.size());
  const double k = 1.0 / (2 * lambda);
  const double rate = f_rate + k;
  const CVector center = z * (k / rate);
  auto integrand = [&](const CVector& w) { return f(w) * std::exp(-k * (z - w).squaredNorm()); };
  return integrate_cn(integrand, n, rate, center, quad_order) / std::pow(2 * kPi * lambda, n);
}

PolySymbol half_heat_inverse(const PolySymbol& f, double lambda) { return heat_flow(f, -lambda / 4); }

GaussPolySymbol phase_to_fock_symbol(const PhaseSymbol& f) {
  const int n = f.n;
  const double lam = f.lambda;
  // p_k = (i / 2 lambda)(z_k - conj z_k), q_k = (z_k + conj z_k) / 2
  std::vector<Poly> pimg, qimg;
  for (int k = 0; k < n; ++k) {
    pimg.push_back(Poly::variable(2 * n, k, I / (2 * lam)) + Poly::variable(2 * n, n + k, -I / (2 * lam)));
    qimg.push_back(Poly::variable(2 * n, k, 0.5) + Poly::variable(2 * n, n + k, 0.5));
  }
  Poly out(2 * n);
  for (const auto& [e, c] : f.poly.terms()) {
    Poly t = Poly::constant(2 * n, c);
    for (int k = 0; k < n; ++k) {
      if (e[k]) t = t * pimg[k].pow(e[k]);
      if (e[n + k]) t = t * qimg[k].pow(e[n + k]);
    }
    out += t;
  }
  return {{n, out}, f.gaussian ? 1.0 / lam : 0.0};
}

PhaseSymbol fock_to_phase_symbol(const PolySymbol& f, double lambda) {
  const int n = f.n;
  std::vector<Poly> zimg, zbimg;
  for (int k = 0; k < n; ++k) {
    zimg.push_back(Poly::variable(2 * n, n + k) + Poly::variable(2 * n, k, -I * lambda));
    zbimg.push_back(Poly::variable(2 * n, n + k) + Poly::variable(2 * n, k, I * lambda));
  }
  Poly out(2 * n);
  for (const auto& [e, c] : f.poly.terms()) {
    Poly t = Poly::constant(2 * n, c);
    for (int k = 0; k < n; ++k) {
      if (e[k]) t = t * zimg[k].pow(e[k]);
      if (e[n + k]) t = t * zbimg[k].pow(e[n + k]);
    }
    out += t;
  }
  return {n, lambda, out, false};
}

PolySymbol u0_via_weyl(const DiffOp& d, double lambda) {
  const PhaseSymbol w(d.n(), lambda, wigner_dequantize(fock_to_schrodinger(d, lambda)), false);
  return phase_to_fock_symbol(w).poly;
}

GaussPolySymbol u0_via_weyl(const OperatorMatrix& a, const CMatrix& b0, int max_index) {
  const OperatorMatrix s = to_schrodinger(a, b0);
  return phase_to_fock_symbol(wigner_exact(s.m, s.basis, max_index));
}

cplx u0_at(const OperatorMatrix& a, const CMatrix& b0, const CVector& z, int quad_order) {
  const WignerEvaluator w(to_schrodinger(a, b0), quad_order);
  return w.scalar_value(-z.imag() / a.basis.lambda, z.real());
}

}  // namespace sw
