#pragma once

#include <Eigen/Dense>

#include "bfd/grid.hpp"

namespace bfd::postproc {

// DFT coefficients of the nodal values, bins k in {-N+1, ..., N} with the
// 1/(2N) normalization; storage index dft_index(k, N) = k + N - 1.
Eigen::VectorXcd dft_coefficients(const grid::GridFunction& u);
int dft_index(int k, int N);

// Removes the high-frequency band: coefficients with |k| > floor((N-1)/2)
// are zeroed, which drops every nu-partner of a retained low mode and both
// band-edge indices +-N/2 for even N. Real input gives exactly real output.
grid::GridFunction spectral_filter(const grid::GridFunction& u);

}  // namespace bfd::postproc
