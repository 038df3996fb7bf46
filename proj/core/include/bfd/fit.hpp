#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bfd::fit {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double resid95 = 0.0;  // 1.96 x RMS residual in log10 units
};

// Least-squares slope of log10(y) against log10(x); needs >= 3 points and
// strictly positive data.
inline LogLogFit loglog(const std::vector<double>& x,
                        const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::invalid_argument("loglog fit: need >= 3 matching points");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::invalid_argument("loglog fit: data must be positive");
    lx[i] = std::log10(x[i]);
    ly[i] = std::log10(y[i]);
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  LogLogFit f;
  const double det = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  double ss = 0;
  for (int i = 0; i < n; ++i) {
    const double r = ly[i] - (f.intercept + f.slope * lx[i]);
    ss += r * r;
  }
  f.resid95 = 1.96 * std::sqrt(ss / n);
  return f;
}

}  // namespace bfd::fit
