#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "bfd/grid.hpp"
#include "bfd/operators.hpp"

namespace bfd::symbol {

using grid::Complex;
using operators::SchemeParams;

// ---------------------------------------------------------------------------
// Closed-form symbols, templated on the scalar type so the asymptotic fits
// can run in extended precision.
// ---------------------------------------------------------------------------

template <class Real>
struct SymbolsT {
  std::complex<Real> mu1, mu2, sigma1, sigma2;
};

template <class Real>
struct EigenSymbolsT {
  std::complex<Real> Qhat1, Qhat2;  // Qhat1 tracks -i*theta/h as theta -> 0
  std::complex<Real> Omega, Delta;
};

template <class Real>
SymbolsT<Real> mu_sigma_t(Real theta, Real h, Real c1, Real c2) {
  using C = std::complex<Real>;
  const C I(Real(0), Real(1));
  const Real s2 = std::sin(theta / 2), sn = std::sin(theta);
  const Real s4 = std::sin(theta / 4), c4 = std::cos(theta / 4);
  const Real s44 = s4 * s4 * s4 * s4, c44 = c4 * c4 * c4 * c4;
  const C e = std::exp(I * (theta / 2)), em = std::exp(-I * (theta / 2));
  const Real f = Real(1) / (Real(3) * h);
  SymbolsT<Real> s;
  s.mu1 = f * (-I * (Real(8) * s2 - sn) - Real(8) * s44 * (c1 + c2 * e));
  s.mu2 = f * (-I * (Real(8) * s2 - sn) + Real(8) * s44 * (c1 * em + c2));
  s.sigma1 = f * (I * (Real(8) * s2 + sn) - Real(8) * c44 * (c1 - c2 * e));
  s.sigma2 = f * (I * (Real(8) * s2 + sn) - Real(8) * c44 * (c1 * em - c2));
  return s;
}

template <class Real>
EigenSymbolsT<Real> eigen_symbols_t(Real theta, Real h, Real c1, Real c2) {
  using C = std::complex<Real>;
  const C I(Real(0), Real(1));
  const Real cs = std::cos(theta), sn = std::sin(theta);
  const Real cs2 = std::cos(2 * theta);
  EigenSymbolsT<Real> out;
  out.Omega = Real(4) * I * (c1 + c2 + 1) * sn +
              C(Real(6) * (c2 - c1) * cs + Real(10) * (c2 - c1));
  out.Delta =
      C(-80 * c1 - 256 + 55 * c1 * c1 + 55 * c2 * c2 - 2 * (63 * c1 + 40) * c2 +
        4 * (15 * c1 * c1 + c1 * (16 - 30 * c2) + c2 * (15 * c2 + 16) + 64) * cs +
        (13 * c1 * c1 + 2 * c1 * (8 - 5 * c2) + c2 * (13 * c2 + 16)) * cs2) +
      Real(8) * I * (c2 - c1) * sn *
          ((Real(3) * (c1 + c2) + 4) * cs + Real(5) * (c1 + c2) + 28);
  const C root = std::sqrt(Real(2) * out.Delta);
  const Real fac = Real(1) / (Real(12) * h);
  C qa = (out.Omega - root) * fac;
  C qb = (out.Omega + root) * fac;
  // Branch selection: the labeling of -+sqrt(2 Delta) does not fix which root
  // is the physical one for all (c1, c2, theta); pick Qhat1 as the root
  // closer to -i*omega = -i*theta/h.
  const C tgt = -I * (theta / h);
  if (std::abs(qb - tgt) < std::abs(qa - tgt)) std::swap(qa, qb);
  out.Qhat1 = qa;
  out.Qhat2 = qb;
  return out;
}

using Symbols = SymbolsT<double>;
using EigenSymbols = EigenSymbolsT<double>;

Symbols mu_sigma(double theta_h, double h, const SchemeParams& p);
// theta_h != 0; the omega = 0 pair is handled by decompose_mode.
EigenSymbols eigen_symbols(double theta_h, double h, const SchemeParams& p);

// ---------------------------------------------------------------------------
// Mode pairs and eigenvector decompositions.
// ---------------------------------------------------------------------------

// Low/high frequency pairing: omega in the low band couples to
// nu = omega - N (omega > 0) or omega + N (omega <= 0).
struct ModePair {
  int omega = 0;
  int nu = 0;
  double theta_h = 0.0;  // 2*pi*omega/N = omega*h * (2*pi/L)
};

ModePair make_mode_pair(int omega, int N);

// Canonical set of pair representatives {-floor((N-1)/2), ..., floor(N/2)};
// the N pairs partition all 2N Fourier bins.
std::vector<int> pair_representatives(int N);

struct ModeCoefficients {
  Complex r;
  Complex alpha, beta;
  bool degenerate = false;
};

// r_k from the first equation of the reduced system, alpha/beta from the
// normalization displays. `omega` only matters through its sign: the
// even-sublattice relation between e^{i nu x} and e^{i omega x} samples
// flips sign with sign(omega), and r carries that sign so that
// r = i*beta/alpha and the eigen-residual bound hold on both half-bands.
ModeCoefficients coefficients(const Symbols& s, Complex Qhat, int k, int omega);

struct SymbolDecomposition {
  ModePair mode;
  Complex mu1, mu2, sigma1, sigma2;
  Complex Omega, Delta;
  Complex Qhat1, Qhat2;
  Complex r1, r2;
  Complex alpha1, beta1, alpha2, beta2;
  double cos_theta = 0.0;
  bool degenerate = false;
};

// Full eigen-decomposition of the 2x2 symbol of the pair (omega, nu) on a
// grid with N cells of width h. Handles omega = 0 explicitly.
SymbolDecomposition decompose_mode(const SchemeParams& p, int omega, int N,
                                   double h);

// psi_k = alpha_k e^{i kappa_omega x} + beta_k e^{i kappa_nu x} sampled on
// the grid nodes, kappa = 2*pi*index/L.
grid::GridFunction mode_vector(const grid::BlockGrid& g,
                               const SymbolDecomposition& d, int k);

double cos_theta(const SymbolDecomposition& d);

// Checks both equations of the reduced 2x2 system for (Qhat_k, r_k);
// returns the largest relative residual over k = 1, 2.
double reduced_system_residual(const SymbolDecomposition& d);

// ---------------------------------------------------------------------------
// Scans.
// ---------------------------------------------------------------------------

struct StabilityReport {
  double max_re_Q1 = 0.0;
  double max_re_Q2 = 0.0;
  double max_cos_theta = 0.0;
  bool stable = false;
};

// Maxima over uniform theta in [-pi, pi] \ {0} plus the omega = 0 pair,
// evaluated at h = 1 (h*Qhat and cos theta are h-independent). Stable iff
// max Re <= 1e-10 and max cos theta < 0.4.
StabilityReport stability_scan(const SchemeParams& p, int theta_samples);

struct AsymptoticRow {
  int power = 0;        // exponent of h in Qhat1 + i*omega at fixed omega
  double fitted = 0.0;  // fitted coefficient of h^power * omega^(power+1)
  double reference = 0.0;
  double rel_err = 0.0;  // |fitted - reference| / max(|reference|, tiny)
};

struct AsymptoticReport {
  double leading_exponent = 0.0;
  double leading_exponent_ref = 0.0;
  std::vector<AsymptoticRow> rows;
};

// Fits the expansion of Qhat1 + i*omega in powers of h over
// theta = omega*h in [1e-3, 1e-1] (extended precision) and compares the
// coefficients against the closed-form references. Requires c1 >= c2.
AsymptoticReport asymptotic_check(const SchemeParams& p, int order_probe = 6);

}  // namespace bfd::symbol
