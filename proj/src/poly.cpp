#include "stratweyl/poly.hpp"

#include <cmath>

namespace sw {

Poly Poly::constant(int nvars, cplx c) {
  Poly p(nvars);
  p.add_term(MultiIndex(nvars, 0), c);
  return p;
}

Poly Poly::monomial(const MultiIndex& exponent, cplx c) {
  Poly p(static_cast<int>(exponent.size()));
  p.add_term(exponent, c);
  return p;
}

Poly Poly::variable(int nvars, int k, cplx c) {
  MultiIndex e(nvars, 0);
  e.at(k) = 1;
  return monomial(e, c);
}

Poly Poly::affine(std::span<const cplx> coeffs, cplx c0) {
  const int n = static_cast<int>(coeffs.size());
  Poly p = constant(n, c0);
  for (int k = 0; k < n; ++k) {
    MultiIndex e(n, 0);
    e[k] = 1;
    p.add_term(e, coeffs[k]);
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

cplx Poly::coeff(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void Poly::add_term(const MultiIndex& e, cplx c) {
  if (static_cast<int>(e.size()) != nvars_) throw DimensionError("Poly: exponent length mismatch");
  if (c == cplx(0.0)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("Poly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("Poly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(cplx c) {
  if (c == cplx(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::times(const Poly& other, int max_degree) const {
  if (other.nvars_ != nvars_) throw DimensionError("Poly: variable count mismatch");
  Poly r(nvars_);
  MultiIndex e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : other.terms_) {
      if (max_degree >= 0 && da + total_degree(eb) > max_degree) continue;
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::truncated(int max_degree) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) <= max_degree) r.terms_.emplace(e, c);
  }
  return r;
}

Poly Poly::pow(int k, int max_degree) const {
  Poly r = constant(nvars_, 1.0);
  for (int i = 0; i < k; ++i) r = r.times(*this, max_degree);
  return r;
}

cplx Poly::evaluate(std::span<const cplx> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw DimensionError("Poly::evaluate: wrong point dimension");
  cplx sum = 0.0;
  for (const auto& [e, c] : terms_) {
    cplx m = c;
    for (int k = 0; k < nvars_; ++k) {
      for (int j = 0; j < e[k]; ++j) m *= x[k];
    }
    sum += m;
  }
  return sum;
}

Poly Poly::derivative(int k) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    MultiIndex f = e;
    f[k] -= 1;
    r.add_term(f, c * static_cast<double>(e[k]));
  }
  return r;
}

double Poly::max_coeff_diff(const Poly& other) const {
  Poly d = *this;
  d -= other;
  double m = 0.0;
  for (const auto& [e, c] : d.terms_) m = std::max(m, std::abs(c));
  return m;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Poly& a, const Poly& b) { return a.times(b); }
Poly operator*(cplx c, Poly a) { return a *= c; }

Poly exp_series(const Poly& p, int max_degree) {
  if (p.coeff(MultiIndex(p.nvars(), 0)) != cplx(0.0)) {
    throw std::invalid_argument("exp_series: polynomial must vanish at the origin");
  }
  Poly sum = Poly::constant(p.nvars(), 1.0);
  Poly term = sum;
  for (int m = 1; m <= max_degree; ++m) {
    term = term.times(p, max_degree);
    term *= 1.0 / m;
    if (term.empty()) break;
    sum += term;
  }
  return sum;
}

}  // namespace sw
