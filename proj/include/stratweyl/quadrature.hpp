#pragma once

#include <functional>
#include <vector>

#include "stratweyl/types.hpp"

namespace sw {

enum class QuadratureKind { GaussHermite1D, GaussLegendre1D, TensorProduct };

/// Nodes and weights of a quadrature rule. For tensor-product rules each node is a point
/// of R^d stored row-wise in `points`.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadratureKind kind = QuadratureKind::GaussHermite1D;
  int order() const { return static_cast<int>(nodes.size()); }
};

/// Largest Gauss-Hermite order accepted; beyond it Newton refinement of the nodes loses
/// accuracy in the tails.
inline constexpr int kMaxGaussHermiteOrder = 200;

/// Rule for the weight e^{-x^2} on R, exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_hermite(int order);

/// Rule for the unit weight on [-1, 1].
QuadratureRule gauss_legendre(int order);

/// One-dimensional rule adapted to the Gaussian e^{-rate (x - center)^2}: returns plain
/// nodes x_i and weights W_i with sum_i W_i f(x_i) ~ int f(x) dx whenever f is that
/// Gaussian times a polynomial.
QuadratureRule gaussian_adapted(int order, double rate, double center);

/// Tensor-product rule on R^d built from one-dimensional rules; points are row-major.
struct TensorRule {
  int dim = 0;
  std::vector<double> points;  // size = count * dim
  std::vector<double> weights;
  int count() const { return static_cast<int>(weights.size()); }
  const double* point(int i) const { return points.data() + static_cast<std::size_t>(i) * dim; }
};

TensorRule tensor_rule(const std::vector<QuadratureRule>& factors);

/// Integrates f over C^n = R^{2n} (coordinates Re z_1..Re z_n, Im z_1..Im z_n, Lebesgue
/// measure dx dy) for integrands of the form Gaussian(rate, center) times a polynomial.
cplx integrate_cn(const std::function<cplx(const CVector&)>& f, int n, double rate,
                  const CVector& center, int order);

}  // namespace sw
