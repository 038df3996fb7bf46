#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

namespace bfd::grid {

using Complex = std::complex<double>;

// Uniform block grid on [0, L): N cells of width h = L/N centred at
// x_j = (j - 1/2) h, each carrying the two quarter-point nodes x_j -+ h/4.
// Nodes are stored interleaved (cell by cell), which coincides with
// monotone spatial order: x_n = h/4 + n h/2, n = 0, ..., 2N-1.
struct BlockGrid {
  int N = 0;
  double L = 0.0;
  double h = 0.0;
  std::vector<double> nodes;

  int size() const { return 2 * N; }
};

BlockGrid build_grid(int N, double L);

// Grid function: complex nodal values on a block grid.
struct GridFunction {
  BlockGrid grid;
  Eigen::VectorXcd values;
};

template <class F>
GridFunction sample(const BlockGrid& g, F&& f) {
  GridFunction u;
  u.grid = g;
  u.values.resize(g.size());
  for (int n = 0; n < g.size(); ++n)
    u.values[n] = Complex(f(g.nodes[n]));
  return u;
}

// Samples of the exact transport solution u(x, t) = f0(x - t mod L).
GridFunction exact_solution(const BlockGrid& g,
                            const std::function<double(double)>& f0, double t);

struct Norms {
  double l2 = 0.0;
  double linf = 0.0;
};

// Discrete l2 norm sqrt(h/2 sum |v_n|^2) and the max norm.
Norms norms(const GridFunction& u);
double l2_norm(const GridFunction& u);
double linf_norm(const GridFunction& u);

Norms error_norms(const GridFunction& u, const GridFunction& ref);

}  // namespace bfd::grid
