#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sw {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// z^k by repeated multiplication (well defined at z = 0, k = 0).
inline cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

/// Tolerance ladder shared by every check in the library.
namespace tol {
inline constexpr double exact = 1e-12;
inline constexpr double quadrature = 1e-8;
inline constexpr double interior = 1e-6;
}  // namespace tol

/// Raised when a numerical precondition fails (rank loss, non-PSD input, order caps).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when arguments have inconsistent dimensions or basis tags.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a point lies outside the chart of an inverse map (orbit transfers).
class ChartError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sw
