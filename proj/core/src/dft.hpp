#pragma once

#include <Eigen/Dense>

#include "bfd/grid.hpp"

namespace bfd::detail {

// Direct DFT on the 2N grid nodes with the physical phases
// exp(-i kappa_k x_n), kappa_k = 2 pi k / L. Bins k run over
// {-N+1, ..., N}; storage index is k + N - 1. Forward carries the
// 1/(2N) normalization so that inverse(forward(u)) = u.
constexpr int dft_index(int k, int N) { return k + N - 1; }

Eigen::VectorXcd forward_dft(const grid::BlockGrid& g,
                             const Eigen::VectorXcd& u);
Eigen::VectorXcd inverse_dft(const grid::BlockGrid& g,
                             const Eigen::VectorXcd& coef);

}  // namespace bfd::detail
