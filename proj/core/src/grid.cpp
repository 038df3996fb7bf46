#include "bfd/grid.hpp"

#include <cmath>

namespace bfd::grid {

BlockGrid build_grid(int N, double L) {
  if (N < 3) throw std::invalid_argument("build_grid: need N >= 3");
  if (!(L > 0.0)) throw std::invalid_argument("build_grid: need L > 0");
  BlockGrid g;
  g.N = N;
  g.L = L;
  g.h = L / N;
  g.nodes.resize(2 * N);
  for (int n = 0; n < 2 * N; ++n)
    g.nodes[n] = g.h / 4.0 + n * g.h / 2.0;
  return g;
}

GridFunction exact_solution(const BlockGrid& g,
                            const std::function<double(double)>& f0, double t) {
  GridFunction u;
  u.grid = g;
  u.values.resize(g.size());
  for (int n = 0; n < g.size(); ++n) {
    double x = g.nodes[n] - t;
    x -= g.L * std::floor(x / g.L);
    u.values[n] = f0(x);
  }
  return u;
}

Norms norms(const GridFunction& u) {
  Norms out;
  double sq = 0.0;
  for (int n = 0; n < u.values.size(); ++n) {
    double a = std::abs(u.values[n]);
    sq += a * a;
    out.linf = std::max(out.linf, a);
  }
  out.l2 = std::sqrt(u.grid.h / 2.0 * sq);
  return out;
}

double l2_norm(const GridFunction& u) { return norms(u).l2; }
double linf_norm(const GridFunction& u) { return norms(u).linf; }

Norms error_norms(const GridFunction& u, const GridFunction& ref) {
  if (u.values.size() != ref.values.size())
    throw std::invalid_argument("error_norms: size mismatch");
  GridFunction d;
  d.grid = u.grid;
  d.values = u.values - ref.values;
  return norms(d);
}

}  // namespace bfd::grid
