#include "stratweyl/multi_index.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sw {

int total_degree(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

double factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative integer");
  return std::tgamma(static_cast<double>(k) + 1.0);
}

double multi_factorial(const MultiIndex& alpha) {
  double r = 1.0;
  for (int a : alpha) r *= factorial(a);
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

namespace {

// Exponent vectors of length n summing exactly to d, lexicographically descending in the
// first entry so that (d,0,...) comes first.
void compositions(int n, int d, MultiIndex& cur, int pos, std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[pos] = a;
    compositions(n, d - a, cur, pos + 1, out);
  }
}

}  // namespace

MultiIndexSet::MultiIndexSet(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 1) throw std::invalid_argument("MultiIndexSet: n must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("MultiIndexSet: negative degree");
  MultiIndex cur(n, 0);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<MultiIndex> level;
    compositions(n, d, cur, 0, level);
    for (auto& a : level) {
      lookup_.emplace(a, static_cast<int>(indices_.size()));
      indices_.push_back(std::move(a));
      degrees_.push_back(d);
    }
  }
}

int MultiIndexSet::index_of(const MultiIndex& alpha) const {
  auto it = lookup_.find(alpha);
  return it == lookup_.end() ? -1 : it->second;
}

int MultiIndexSet::prefix_size(int d) const {
  if (d < 0) return 0;
  int count = 0;
  while (count < size() && degrees_[count] <= d) ++count;
  return count;
}

}  // namespace sw
