#include "bfd/symbol.hpp"

#include <limits>
#include <numbers>
#include <stdexcept>

namespace bfd::symbol {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);
}  // namespace

Symbols mu_sigma(double theta_h, double h, const SchemeParams& p) {
  if (!(h > 0.0)) throw std::invalid_argument("mu_sigma: need h > 0");
  return mu_sigma_t<double>(theta_h, h, p.c1, p.c2);
}

EigenSymbols eigen_symbols(double theta_h, double h, const SchemeParams& p) {
  if (!(h > 0.0)) throw std::invalid_argument("eigen_symbols: need h > 0");
  return eigen_symbols_t<double>(theta_h, h, p.c1, p.c2);
}

ModePair make_mode_pair(int omega, int N) {
  if (N < 2) throw std::invalid_argument("make_mode_pair: need N >= 2");
  if (2 * std::abs(omega) > N)
    throw std::invalid_argument("make_mode_pair: omega outside low band");
  ModePair m;
  m.omega = omega;
  m.nu = omega > 0 ? omega - N : omega + N;
  m.theta_h = 2.0 * kPi * omega / N;
  return m;
}

std::vector<int> pair_representatives(int N) {
  std::vector<int> out;
  out.reserve(N);
  for (int w = -((N - 1) / 2); w <= N / 2; ++w) out.push_back(w);
  return out;
}

ModeCoefficients coefficients(const Symbols& s, Complex Qhat, int k,
                              int omega) {
  if (k != 1 && k != 2) throw std::invalid_argument("coefficients: k in {1,2}");
  ModeCoefficients out;
  const Complex num = s.mu1 - Qhat, den = s.sigma1 - Qhat;
  if (std::abs(den) == 0.0 ||
      (std::abs(num) > 0.0 && std::abs(num) / std::abs(den) > 1e150)) {
    out.degenerate = true;
    out.r = Complex(std::numeric_limits<double>::infinity(), 0.0);
    out.alpha = 0.0;
    out.beta = 1.0;
    return out;
  }
  const double sign = omega >= 0 ? 1.0 : -1.0;
  out.r = sign * num / den;
  const double nrm = std::sqrt(1.0 + std::norm(out.r));
  if (k == 1) {
    out.alpha = 1.0 / nrm;
    out.beta = -kI * out.r / nrm;
  } else {
    const double ra = std::abs(out.r);
    if (ra == 0.0) {
      out.alpha = kI;
      out.beta = 0.0;
    } else {
      out.alpha = kI * (ra / out.r) / nrm;
      out.beta = ra / nrm;
    }
  }
  return out;
}

SymbolDecomposition decompose_mode(const SchemeParams& p, int omega, int N,
                                   double h) {
  if (!(h > 0.0)) throw std::invalid_argument("decompose_mode: need h > 0");
  SymbolDecomposition d;
  d.mode = make_mode_pair(omega, N);
  if (omega == 0) {
    // The generic route degenerates at theta = 0: mu1 = mu2 = 0 and
    // sigma1 = sigma2 = -8(c1-c2)/(3h). Eigenpairs are exact here: the
    // constant mode with Qhat = 0 and the nu = N mode with Qhat = sigma.
    const auto s = mu_sigma(0.0, h, p);
    const auto es = eigen_symbols(0.0, h, p);
    d.mu1 = s.mu1;
    d.mu2 = s.mu2;
    d.sigma1 = s.sigma1;
    d.sigma2 = s.sigma2;
    d.Omega = es.Omega;
    d.Delta = es.Delta;
    d.Qhat1 = 0.0;
    d.Qhat2 = 8.0 * (p.c2 - p.c1) / (3.0 * h);
    d.r1 = 0.0;
    d.alpha1 = 1.0;
    d.beta1 = 0.0;
    d.r2 = Complex(std::numeric_limits<double>::infinity(), 0.0);
    d.alpha2 = 0.0;
    d.beta2 = 1.0;
    d.degenerate = true;
    d.cos_theta = 0.0;
    return d;
  }
  const double theta = d.mode.theta_h;
  const auto s = mu_sigma(theta, h, p);
  const auto es = eigen_symbols(theta, h, p);
  d.mu1 = s.mu1;
  d.mu2 = s.mu2;
  d.sigma1 = s.sigma1;
  d.sigma2 = s.sigma2;
  d.Omega = es.Omega;
  d.Delta = es.Delta;
  d.Qhat1 = es.Qhat1;
  d.Qhat2 = es.Qhat2;
  const auto m1 = coefficients(s, es.Qhat1, 1, omega);
  const auto m2 = coefficients(s, es.Qhat2, 2, omega);
  d.r1 = m1.r;
  d.alpha1 = m1.alpha;
  d.beta1 = m1.beta;
  d.r2 = m2.r;
  d.alpha2 = m2.alpha;
  d.beta2 = m2.beta;
  d.degenerate = m1.degenerate || m2.degenerate;
  d.cos_theta = cos_theta(d);
  return d;
}

grid::GridFunction mode_vector(const grid::BlockGrid& g,
                               const SymbolDecomposition& d, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("mode_vector: k in {1,2}");
  const Complex a = k == 1 ? d.alpha1 : d.alpha2;
  const Complex b = k == 1 ? d.beta1 : d.beta2;
  const double kw = 2.0 * kPi * d.mode.omega / g.L;
  const double kn = 2.0 * kPi * d.mode.nu / g.L;
  grid::GridFunction psi;
  psi.grid = g;
  psi.values.resize(g.size());
  for (int n = 0; n < g.size(); ++n) {
    const double x = g.nodes[n];
    psi.values[n] = a * std::polar(1.0, kw * x) + b * std::polar(1.0, kn * x);
  }
  return psi;
}

double cos_theta(const SymbolDecomposition& d) {
  return std::abs(std::conj(d.alpha1) * d.alpha2 +
                  std::conj(d.beta1) * d.beta2);
}

double reduced_system_residual(const SymbolDecomposition& d) {
  const double sign = d.mode.omega >= 0 ? 1.0 : -1.0;
  double worst = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const Complex r = sign * (k == 1 ? d.r1 : d.r2);
    const Complex Q = k == 1 ? d.Qhat1 : d.Qhat2;
    if (!std::isfinite(std::abs(r))) continue;  // degenerate member
    const Complex lhs1 = d.mu1 - d.sigma1 * r, rhs1 = Q * (1.0 - r);
    const Complex lhs2 = d.mu2 + d.sigma2 * r, rhs2 = Q * (1.0 + r);
    const double s1 = std::abs(d.mu1) + std::abs(d.sigma1 * r) +
                      std::abs(Q) * (1.0 + std::abs(r));
    const double s2 = std::abs(d.mu2) + std::abs(d.sigma2 * r) +
                      std::abs(Q) * (1.0 + std::abs(r));
    worst = std::max(worst, std::abs(lhs1 - rhs1) / std::max(s1, 1e-300));
    worst = std::max(worst, std::abs(lhs2 - rhs2) / std::max(s2, 1e-300));
  }
  return worst;
}

StabilityReport stability_scan(const SchemeParams& p, int theta_samples) {
  if (theta_samples < 64)
    throw std::invalid_argument("stability_scan: need >= 64 samples");
  StabilityReport rep;
  rep.max_re_Q1 = -std::numeric_limits<double>::infinity();
  rep.max_re_Q2 = -std::numeric_limits<double>::infinity();
  const double h = 1.0;  // h*Qhat and cos theta do not depend on h
  for (int i = 0; i < theta_samples; ++i) {
    const double theta = -kPi + 2.0 * kPi * i / (theta_samples - 1.0);
    if (std::abs(theta) < 1e-14) continue;
    const auto s = mu_sigma(theta, h, p);
    const auto es = eigen_symbols(theta, h, p);
    rep.max_re_Q1 = std::max(rep.max_re_Q1, es.Qhat1.real());
    rep.max_re_Q2 = std::max(rep.max_re_Q2, es.Qhat2.real());
    const auto m1 = coefficients(s, es.Qhat1, 1, 1);
    const auto m2 = coefficients(s, es.Qhat2, 2, 1);
    if (!m1.degenerate && !m2.degenerate) {
      const double ct = std::abs(std::conj(m1.alpha) * m2.alpha +
                                 std::conj(m1.beta) * m2.beta);
      rep.max_cos_theta = std::max(rep.max_cos_theta, ct);
    }
  }
  // omega = 0 pair: eigenvalues 0 and 8(c2-c1)/(3h), orthogonal eigenvectors.
  rep.max_re_Q1 = std::max(rep.max_re_Q1, 0.0);
  rep.max_re_Q2 = std::max(rep.max_re_Q2, 8.0 * (p.c2 - p.c1) / 3.0);
  rep.stable = std::max(rep.max_re_Q1, rep.max_re_Q2) <= 1e-10 &&
               rep.max_cos_theta < 0.4;
  return rep;
}

namespace {

using LD = long double;
using CLD = std::complex<LD>;

// Least squares of z ~ a + b * x over given samples.
struct AffineFit {
  LD a = 0, b = 0;
};

AffineFit fit_affine(const std::vector<LD>& x, const std::vector<LD>& z) {
  LD n = 0, sx = 0, sxx = 0, sz = 0, sxz = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    n += 1;
    sx += x[i];
    sxx += x[i] * x[i];
    sz += z[i];
    sxz += x[i] * z[i];
  }
  const LD det = n * sxx - sx * sx;
  AffineFit f;
  f.b = (n * sxz - sx * sz) / det;
  f.a = (sz - f.b * sx) / n;
  return f;
}

std::vector<LD> log_spaced(LD lo, LD hi, int n) {
  std::vector<LD> out(n);
  const LD la = std::log(lo), lb = std::log(hi);
  for (int i = 0; i < n; ++i)
    out[i] = std::exp(la + (lb - la) * i / (n - 1));
  return out;
}

// Qhat1 + i*omega at omega = 1, h = theta, in extended precision.
CLD q1_defect(LD theta, LD c1, LD c2) {
  const auto es = eigen_symbols_t<LD>(theta, theta, c1, c2);
  return es.Qhat1 + CLD(LD(0), LD(1));
}

}  // namespace

AsymptoticReport asymptotic_check(const SchemeParams& p, int order_probe) {
  if (p.c1 < p.c2)
    throw std::invalid_argument("asymptotic_check: requires c1 >= c2");
  const LD c1 = p.c1, c2 = p.c2;
  const bool equal = p.c1 == p.c2;
  AsymptoticReport rep;

  const auto hs = log_spaced(1e-3L, 1e-1L, 48);
  std::vector<LD> im(hs.size()), re(hs.size());
  for (size_t i = 0; i < hs.size(); ++i) {
    const CLD y = q1_defect(hs[i], c1, c2);
    im[i] = y.imag();
    re[i] = y.real();
  }

  // Leading exponent from the top of the window: at c1 = c2 = 1/2 the
  // defect decays like h^6 and drops to the extended-precision rounding
  // floor below theta ~ 0.02, which would contaminate the slope.
  {
    std::vector<LD> lx, ly;
    for (size_t i = 0; i < hs.size(); ++i) {
      if (hs[i] < 0.03L) continue;
      const LD mag = std::hypot(im[i], re[i]);
      lx.push_back(std::log(hs[i]));
      ly.push_back(std::log(mag));
    }
    rep.leading_exponent = static_cast<double>(fit_affine(lx, ly).b);
    rep.leading_exponent_ref = (equal && p.c1 == 0.5) ? 6.0 : 4.0;
  }

  auto push_row = [&rep](int power, LD fitted, double reference) {
    AsymptoticRow row;
    row.power = power;
    row.fitted = static_cast<double>(fitted);
    row.reference = reference;
    const double den = std::max(std::abs(reference), 1e-12);
    row.rel_err = std::abs(row.fitted - reference) / den;
    rep.rows.push_back(row);
  };

  // Coefficient fits run on the upper subwindow theta >= 0.02: dividing
  // out h^4 (or h^5) amplifies the rounding floor of Qhat1 by up to 1e12
  // at the small end of the window, while at theta >= 0.02 it stays many
  // orders below every coefficient probed here.
  std::vector<LD> xs, zim, zre;
  for (size_t i = 0; i < hs.size(); ++i) {
    if (hs[i] < 0.02L) continue;
    const LD h4 = hs[i] * hs[i] * hs[i] * hs[i];
    xs.push_back(hs[i] * hs[i]);
    zim.push_back(im[i] / h4);
    zre.push_back(re[i] / (h4 * hs[i]));
  }

  // Imag part: a4 h^4 + a6 h^6, fitted as z = a4 + a6 x with x = h^2.
  const auto fim = fit_affine(xs, zim);
  const double ref4 =
      equal ? (1.0 - 2.0 * p.c1) / (240.0 * (p.c1 + 2.0)) : 1.0 / 480.0;
  push_row(4, fim.a, ref4);

  if (!equal) {
    // Real part enters at h^5: a5 h^5 + a7 h^7.
    const auto fre = fit_affine(xs, zre);
    const double ref5 = -(p.c1 + p.c2) / (384.0 * (p.c1 - p.c2));
    push_row(5, fre.a, ref5);
  }

  if (equal && order_probe >= 6) {
    const double c = p.c1;
    const double ref6 =
        -(2.0 * c * c - 6.0 * c + 1.0) / (4032.0 * (c + 2.0) * (c + 2.0));
    push_row(6, fim.b, ref6);
  }

  return rep;
}

}  // namespace bfd::symbol
