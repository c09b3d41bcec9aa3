#include "stratweyl/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "stratweyl/types.hpp"

namespace sw {

namespace {

void check_args(int k, double lambda) {
  if (k < 0) throw std::invalid_argument("hermite: negative index");
  if (k > kMaxHermiteIndex) {
    throw NumericError("hermite: index " + std::to_string(k) + " exceeds cap " +
                       std::to_string(kMaxHermiteIndex));
  }
  if (!(lambda > 0.0)) throw std::invalid_argument("hermite: lambda must be positive");
}

}  // namespace

std::vector<double> hermite_poly_table(int kmax, double lambda, double x) {
  check_args(kmax, lambda);
  std::vector<double> h(kmax + 1);
  h[0] = std::pow(lambda / kPi, 0.25);
  if (kmax >= 1) h[1] = std::sqrt(2.0 * lambda) * x * h[0];
  for (int k = 1; k < kmax; ++k) {
    h[k + 1] = (std::sqrt(2.0 * lambda) * x * h[k] - std::sqrt(static_cast<double>(k)) * h[k - 1]) /
               std::sqrt(k + 1.0);
  }
  return h;
}

std::vector<double> hermite_fn_table(int kmax, double lambda, double x) {
  std::vector<double> h = hermite_poly_table(kmax, lambda, x);
  const double g = std::exp(-0.5 * lambda * x * x);
  for (double& v : h) v *= g;
  return h;
}

double hermite_fn(int k, double lambda, double x) { return hermite_fn_table(k, lambda, x).back(); }

}  // namespace sw
