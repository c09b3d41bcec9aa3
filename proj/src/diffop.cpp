#include "stratweyl/diffop.hpp"

namespace sw {

std::pair<MultiIndex, MultiIndex> split_exponent(const MultiIndex& e) {
  const std::size_t n = e.size() / 2;
  return {MultiIndex(e.begin(), e.begin() + n), MultiIndex(e.begin() + n, e.end())};
}

DiffOp DiffOp::identity(int n, cplx c) {
  DiffOp d(n);
  d.coeffs_.add_term(MultiIndex(2 * n, 0), c);
  return d;
}

DiffOp DiffOp::term(const MultiIndex& mult, const MultiIndex& deriv, cplx c) {
  if (mult.size() != deriv.size()) throw DimensionError("DiffOp::term: exponent length mismatch");
  DiffOp d(static_cast<int>(mult.size()));
  MultiIndex e(mult);
  e.insert(e.end(), deriv.begin(), deriv.end());
  d.coeffs_.add_term(e, c);
  return d;
}

DiffOp DiffOp::mult(int n, int k, cplx c) {
  MultiIndex a(n, 0), b(n, 0);
  a.at(k) = 1;
  return term(a, b, c);
}

DiffOp DiffOp::deriv(int n, int k, cplx c) {
  MultiIndex a(n, 0), b(n, 0);
  b.at(k) = 1;
  return term(a, b, c);
}

int DiffOp::order() const {
  int r = -1;
  for (const auto& [e, c] : coeffs_.terms()) r = std::max(r, total_degree(split_exponent(e).second));
  return r;
}

int DiffOp::degree() const { return coeffs_.degree(); }

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.n_ != n_) throw DimensionError("DiffOp: dimension mismatch");
  coeffs_ += o.coeffs_;
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (o.n_ != n_) throw DimensionError("DiffOp: dimension mismatch");
  coeffs_ -= o.coeffs_;
  return *this;
}

DiffOp& DiffOp::operator*=(cplx c) {
  coeffs_ *= c;
  return *this;
}

DiffOp DiffOp::compose(const DiffOp& o) const {
  if (o.n_ != n_) throw DimensionError("DiffOp: dimension mismatch");
  DiffOp r(n_);
  MultiIndex e(2 * n_);
  for (const auto& [e1, c1] : coeffs_.terms()) {
    for (const auto& [e2, c2] : o.coeffs_.terms()) {
      // M^a D^b M^g D^d = M^a (sum_eps C(b,eps) g!/(g-eps)! M^{g-eps} D^{b-eps}) D^d,
      // factorized over coordinates.
      std::vector<std::vector<std::pair<int, double>>> per_coord(n_);
      for (int k = 0; k < n_; ++k) {
        const int b = e1[n_ + k], g = e2[k];
        for (int eps = 0; eps <= std::min(b, g); ++eps) {
          const double w = binomial(b, eps) * factorial(g) / factorial(g - eps);
          per_coord[k].emplace_back(eps, w);
        }
      }
      std::vector<int> pick(n_, 0);
      while (true) {
        double w = 1.0;
        for (int k = 0; k < n_; ++k) {
          const auto [eps, wk] = per_coord[k][pick[k]];
          w *= wk;
          e[k] = e1[k] + e2[k] - eps;
          e[n_ + k] = e1[n_ + k] - eps + e2[n_ + k];
        }
        r.coeffs_.add_term(e, c1 * c2 * w);
        int k = n_ - 1;
        for (; k >= 0; --k) {
          if (++pick[k] < static_cast<int>(per_coord[k].size())) break;
          pick[k] = 0;
        }
        if (k < 0) break;
      }
    }
  }
  return r;
}

Poly DiffOp::apply(const Poly& f) const {
  if (f.nvars() != n_) throw DimensionError("DiffOp::apply: polynomial dimension mismatch");
  Poly out(n_);
  for (const auto& [e, c] : coeffs_.terms()) {
    const auto [a, b] = split_exponent(e);
    for (const auto& [fe, fc] : f.terms()) {
      double w = 1.0;
      MultiIndex r(n_);
      bool zero = false;
      for (int k = 0; k < n_; ++k) {
        if (fe[k] < b[k]) {
          zero = true;
          break;
        }
        w *= factorial(fe[k]) / factorial(fe[k] - b[k]);
        r[k] = fe[k] - b[k] + a[k];
      }
      if (!zero) out.add_term(r, c * fc * w);
    }
  }
  return out;
}

DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
DiffOp operator*(const DiffOp& a, const DiffOp& b) { return a.compose(b); }
DiffOp operator*(cplx c, DiffOp a) { return a *= c; }
DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

}  // namespace sw
