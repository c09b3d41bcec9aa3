#pragma once

#include <vector>

namespace sw {

/// Largest Hermite index evaluated; the recurrence stays finite well past this point but
/// the tables built on it are sized by truncation degree, which never approaches it.
inline constexpr int kMaxHermiteIndex = 400;

/// k-th Hermite function with scale lambda:
///   h_k(x) = (lambda/pi)^{1/4} (2^k k!)^{-1/2} H_k(sqrt(lambda) x) e^{-lambda x^2 / 2},
/// evaluated with the orthonormal three-term recurrence.
double hermite_fn(int k, double lambda, double x);

/// h_0(x), ..., h_kmax(x) in one pass.
std::vector<double> hermite_fn_table(int kmax, double lambda, double x);

/// Same recurrence without the Gaussian factor: h_k(x) e^{lambda x^2 / 2}.
std::vector<double> hermite_poly_table(int kmax, double lambda, double x);

}  // namespace sw
