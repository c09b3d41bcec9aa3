#pragma once

#include <map>
#include <span>

#include "stratweyl/multi_index.hpp"
#include "stratweyl/types.hpp"

namespace sw {

/// Sparse polynomial with complex coefficients in a fixed number of variables.
class Poly {
 public:
  using Terms = std::map<MultiIndex, cplx>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, cplx c);
  static Poly monomial(const MultiIndex& exponent, cplx c = 1.0);
  static Poly variable(int nvars, int k, cplx c = 1.0);
  /// sum_k coeffs[k] x_k + c0
  static Poly affine(std::span<const cplx> coeffs, cplx c0);

  int nvars() const { return nvars_; }
  int degree() const;
  bool empty() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  cplx coeff(const MultiIndex& e) const;
  void add_term(const MultiIndex& e, cplx c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(cplx c);

  /// Product truncated at total degree `max_degree` (negative: no truncation).
  Poly times(const Poly& other, int max_degree = -1) const;
  Poly truncated(int max_degree) const;
  Poly pow(int k, int max_degree = -1) const;

  cplx evaluate(std::span<const cplx> x) const;
  Poly derivative(int k) const;

  /// Largest coefficient magnitude of (this - other).
  double max_coeff_diff(const Poly& other) const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(cplx c, Poly a);

/// Truncated Taylor series of exp(p) for a polynomial p without constant term.
Poly exp_series(const Poly& p, int max_degree);

}  // namespace sw
