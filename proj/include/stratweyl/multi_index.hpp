#pragma once

#include <map>
#include <vector>

namespace sw {

using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& alpha);

/// alpha! = prod alpha_k!
double multi_factorial(const MultiIndex& alpha);

double factorial(int k);
double binomial(int n, int k);

/// All multi-indices of length n with |alpha| <= N, ordered by total degree and then
/// lexicographically. Degree-d indices form a contiguous range, so "degree <= N - m"
/// is always a prefix of the enumeration.
class MultiIndexSet {
 public:
  MultiIndexSet() = default;
  MultiIndexSet(int n, int max_degree);

  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  int size() const { return static_cast<int>(indices_.size()); }

  const MultiIndex& operator[](int i) const { return indices_[i]; }
  int degree(int i) const { return degrees_[i]; }

  /// Position of alpha, or -1 when alpha is outside the set.
  int index_of(const MultiIndex& alpha) const;

  /// Number of leading entries with degree <= d.
  int prefix_size(int d) const;

  const std::vector<MultiIndex>& all() const { return indices_; }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<MultiIndex> indices_;
  std::vector<int> degrees_;
  std::map<MultiIndex, int> lookup_;
};

}  // namespace sw
