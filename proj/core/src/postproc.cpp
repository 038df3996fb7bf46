#include "bfd/postproc.hpp"

#include "dft.hpp"

namespace bfd::postproc {

Eigen::VectorXcd dft_coefficients(const grid::GridFunction& u) {
  return detail::forward_dft(u.grid, u.values);
}

int dft_index(int k, int N) { return detail::dft_index(k, N); }

grid::GridFunction spectral_filter(const grid::GridFunction& u) {
  const int N = u.grid.N;
  double max_abs = 0.0, max_imag = 0.0;
  for (int n = 0; n < u.values.size(); ++n) {
    max_abs = std::max(max_abs, std::abs(u.values[n]));
    max_imag = std::max(max_imag, std::abs(u.values[n].imag()));
  }
  const bool real_input = max_imag <= 1e-12 * std::max(1.0, max_abs);

  Eigen::VectorXcd coef = detail::forward_dft(u.grid, u.values);
  const int kmax = (N - 1) / 2;
  for (int k = -N + 1; k <= N; ++k) {
    if (std::abs(k) > kmax) coef[detail::dft_index(k, N)] = 0.0;
  }
  if (real_input) {
    // Enforce conjugate symmetry of the retained band so the inverse
    // transform is real by construction, not just to rounding.
    coef[detail::dft_index(0, N)] =
        grid::Complex(coef[detail::dft_index(0, N)].real(), 0.0);
    for (int k = 1; k <= kmax; ++k) {
      const grid::Complex a =
          0.5 * (coef[detail::dft_index(k, N)] +
                 std::conj(coef[detail::dft_index(-k, N)]));
      coef[detail::dft_index(k, N)] = a;
      coef[detail::dft_index(-k, N)] = std::conj(a);
    }
  }
  grid::GridFunction out;
  out.grid = u.grid;
  out.values = detail::inverse_dft(u.grid, coef);
  if (real_input) {
    for (int n = 0; n < out.values.size(); ++n)
      out.values[n] = grid::Complex(out.values[n].real(), 0.0);
  }
  return out;
}

}  // namespace bfd::postproc
