#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "bfd/grid.hpp"
#include "bfd/operators.hpp"

namespace testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(20260814u);
  return gen;
}

inline double urand(double a, double b) {
  std::uniform_real_distribution<double> dist(a, b);
  return dist(rng());
}

inline bfd::operators::SchemeParams random_params() {
  return {urand(-1.0, 1.0), urand(-1.0, 1.0)};
}

// Random parameters in the design wedge c1 >= c2. Note: this wedge is not
// uniformly stable (parts of it carry eigenvalues with positive real part),
// so use explicit scan-verified pairs for any long-time growth assertion.
inline bfd::operators::SchemeParams random_wedge_params() {
  auto p = random_params();
  if (p.c1 < p.c2) std::swap(p.c1, p.c2);
  return p;
}

inline Eigen::VectorXcd random_complex_vector(int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = {urand(-1.0, 1.0), urand(-1.0, 1.0)};
  return v;
}

inline double rel_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  if (scale == 0.0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace testutil
