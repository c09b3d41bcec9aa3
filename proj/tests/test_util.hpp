#pragma once

#include <random>

#include "stratweyl/types.hpp"

namespace swtest {

inline sw::CMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  std::normal_distribution<double> nd;
  sw::CMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = sw::cplx(nd(rng), nd(rng));
  return m;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace swtest

#include "stratweyl/motion.hpp"

namespace swtest {

inline sw::MotionGroupElement random_motion(std::mt19937_64& rng, const sw::CompactK& K, double r = 1.0) {
  sw::MotionGroupElement g = sw::MotionGroupElement::identity(K.n());
  for (int i = 0; i < K.n(); ++i) g.z0[i] = sw::cplx(uniform(rng, -r, r), uniform(rng, -r, r));
  g.c0 = uniform(rng, -1, 1);
  g.k = K.random_element(rng);
  return g;
}

inline sw::MotionAlgElement random_motion_alg(std::mt19937_64& rng, const sw::CompactK& K, double r = 1.0) {
  sw::MotionAlgElement X = sw::MotionAlgElement::zero(K.n());
  for (int i = 0; i < K.n(); ++i) X.a[i] = sw::cplx(uniform(rng, -r, r), uniform(rng, -r, r));
  X.c = uniform(rng, -r, r);
  X.A = K.random_algebra(rng, r);
  return X;
}

inline sw::CVector random_cvec(std::mt19937_64& rng, int n, double r) {
  sw::CVector z(n);
  for (int i = 0; i < n; ++i) z[i] = sw::cplx(uniform(rng, -r, r), uniform(rng, -r, r));
  return z;
}

/// The compact factors exercised by most suites.
inline std::vector<sw::CompactK> sample_groups() {
  Eigen::VectorXi m1(1), m2(2);
  m1 << 1;
  m2 << 2, -1;
  return {sw::CompactK(sw::CompactChoice::trivial(1)), sw::CompactK(sw::CompactChoice::torus(m1)),
          sw::CompactK(sw::CompactChoice::torus(m2)), sw::CompactK(sw::CompactChoice::su2(0.5)),
          sw::CompactK(sw::CompactChoice::su2(1.0))};
}

}  // namespace swtest
