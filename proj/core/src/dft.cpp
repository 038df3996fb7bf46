#include "dft.hpp"

#include <numbers>
#include <stdexcept>

namespace bfd::detail {

Eigen::VectorXcd forward_dft(const grid::BlockGrid& g,
                             const Eigen::VectorXcd& u) {
  const int n = g.size();
  if (u.size() != n) throw std::invalid_argument("forward_dft: size mismatch");
  Eigen::VectorXcd coef(n);
  for (int k = -g.N + 1; k <= g.N; ++k) {
    const double kap = 2.0 * std::numbers::pi * k / g.L;
    grid::Complex acc = 0.0;
    for (int m = 0; m < n; ++m)
      acc += std::polar(1.0, -kap * g.nodes[m]) * u[m];
    coef[dft_index(k, g.N)] = acc / static_cast<double>(n);
  }
  return coef;
}

Eigen::VectorXcd inverse_dft(const grid::BlockGrid& g,
                             const Eigen::VectorXcd& coef) {
  const int n = g.size();
  if (coef.size() != n) throw std::invalid_argument("inverse_dft: size mismatch");
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(n);
  for (int k = -g.N + 1; k <= g.N; ++k) {
    const grid::Complex c = coef[dft_index(k, g.N)];
    if (c == grid::Complex(0.0, 0.0)) continue;
    const double kap = 2.0 * std::numbers::pi * k / g.L;
    for (int m = 0; m < n; ++m)
      u[m] += c * std::polar(1.0, kap * g.nodes[m]);
  }
  return u;
}

}  // namespace bfd::detail
