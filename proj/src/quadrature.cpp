#include "stratweyl/quadrature.hpp"

#include <cmath>
#include <string>

namespace sw {

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
  if (order > kMaxGaussHermiteOrder) {
    throw NumericError("gauss_hermite: order " + std::to_string(order) + " exceeds cap " +
                       std::to_string(kMaxGaussHermiteOrder));
  }
  // Newton iteration on the orthonormal Hermite recurrence, with the classical asymptotic
  // starting guesses for the largest roots.
  const int n = order;
  const double pim4 = std::pow(kPi, -0.25);
  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  QuadratureRule r;
  r.kind = QuadratureKind::GaussHermite1D;
  // Ascending node order.
  r.nodes.assign(x.rbegin(), x.rend());
  r.weights.assign(w.rbegin(), w.rend());
  return r;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  const int n = order;
  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  QuadratureRule r;
  r.kind = QuadratureKind::GaussLegendre1D;
  r.nodes = std::move(x);
  r.weights = std::move(w);
  return r;
}

QuadratureRule gaussian_adapted(int order, double rate, double center) {
  if (rate <= 0.0) throw std::invalid_argument("gaussian_adapted: rate must be positive");
  QuadratureRule gh = gauss_hermite(order);
  const double s = 1.0 / std::sqrt(rate);
  for (int i = 0; i < gh.order(); ++i) {
    const double t = gh.nodes[i];
    gh.weights[i] *= std::exp(t * t) * s;
    gh.nodes[i] = center + t * s;
  }
  return gh;
}

TensorRule tensor_rule(const std::vector<QuadratureRule>& factors) {
  TensorRule t;
  t.dim = static_cast<int>(factors.size());
  std::size_t count = 1;
  for (const auto& f : factors) count *= f.nodes.size();
  t.points.resize(count * t.dim);
  t.weights.resize(count);
  std::vector<int> idx(t.dim, 0);
  for (std::size_t c = 0; c < count; ++c) {
    double wgt = 1.0;
    for (int d = 0; d < t.dim; ++d) {
      t.points[c * t.dim + d] = factors[d].nodes[idx[d]];
      wgt *= factors[d].weights[idx[d]];
    }
    t.weights[c] = wgt;
    for (int d = t.dim - 1; d >= 0; --d) {
      if (++idx[d] < factors[d].order()) break;
      idx[d] = 0;
    }
  }
  return t;
}

cplx integrate_cn(const std::function<cplx(const CVector&)>& f, int n, double rate,
                  const CVector& center, int order) {
  std::vector<QuadratureRule> factors;
  for (int k = 0; k < n; ++k) factors.push_back(gaussian_adapted(order, rate, center[k].real()));
  for (int k = 0; k < n; ++k) factors.push_back(gaussian_adapted(order, rate, center[k].imag()));
  const TensorRule t = tensor_rule(factors);
  cplx sum = 0.0;
  CVector z(n);
  for (int c = 0; c < t.count(); ++c) {
    const double* p = t.point(c);
    for (int k = 0; k < n; ++k) z[k] = cplx(p[k], p[n + k]);
    sum += t.weights[c] * f(z);
  }
  return sum;
}

}  // namespace sw
