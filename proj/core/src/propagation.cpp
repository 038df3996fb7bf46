#include "bfd/propagation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "dft.hpp"

namespace bfd::propagation {

const RKTableau& RKTableau::butcher6() {
  static const RKTableau tab = [] {
    RKTableau t;
    t.stages = 7;
    t.order = 6;
    t.c = {0.0, 1.0 / 3, 2.0 / 3, 1.0 / 3, 1.0 / 2, 1.0 / 2, 1.0};
    t.a = {{},
           {1.0 / 3},
           {0.0, 2.0 / 3},
           {1.0 / 12, 1.0 / 3, -1.0 / 12},
           {-1.0 / 16, 9.0 / 8, -3.0 / 16, -3.0 / 8},
           {0.0, 9.0 / 8, -3.0 / 8, -3.0 / 4, 1.0 / 2},
           {9.0 / 44, -9.0 / 11, 63.0 / 44, 18.0 / 11, 0.0, -16.0 / 11}};
    t.b = {11.0 / 120, 0.0,       27.0 / 40, 27.0 / 40,
           -4.0 / 15,  -4.0 / 15, 11.0 / 120};
    return t;
  }();
  return tab;
}

grid::GridFunction rk_integrate(const Rhs& rhs, const grid::GridFunction& u0,
                                double T, double cfl, double step_scale,
                                const RKTableau& tab) {
  if (!(cfl > 0.0)) throw std::invalid_argument("rk_integrate: need cfl > 0");
  if (T < 0.0) throw std::invalid_argument("rk_integrate: need T >= 0");
  grid::GridFunction u = u0;
  if (T == 0.0) return u;

  const long nsteps =
      static_cast<long>(std::ceil(T / (cfl * step_scale) - 1e-12));
  const double dt = T / static_cast<double>(std::max(nsteps, 1L));
  const int s = tab.stages;
  // Relative growth by 1e12 cannot be a transient of a well-posed run (stable
  // runs stay O(1)); catch divergence early with a clear diagnostic instead of
  // waiting for floating-point overflow.
  const double blowup_sq = 1e24 * (u.values.squaredNorm() + 1e-300);
  std::vector<Eigen::VectorXcd> k(s);
  for (long step = 0; step < nsteps; ++step) {
    for (int i = 0; i < s; ++i) {
      Eigen::VectorXcd stage = u.values;
      for (int j = 0; j < i; ++j) {
        if (tab.a[i][j] != 0.0) stage += (dt * tab.a[i][j]) * k[j];
      }
      k[i] = rhs(stage);
    }
    for (int i = 0; i < s; ++i) {
      if (tab.b[i] != 0.0) u.values += (dt * tab.b[i]) * k[i];
    }
    const double sq = u.values.squaredNorm();
    if (!std::isfinite(sq) || sq > blowup_sq) {
      throw std::runtime_error(
          "rk_integrate: solution blew up at t = " +
          std::to_string(dt * (step + 1)) +
          " (unstable scheme or cfl too large)");
    }
  }
  return u;
}

grid::GridFunction rk_integrate(const operators::BlockOperator& op,
                                const grid::GridFunction& u0, double T,
                                double cfl) {
  return rk_integrate(
      [&op](const Eigen::VectorXcd& v) { return operators::apply(op, v); }, u0,
      T, cfl, op.h / 2.0);
}

grid::GridFunction rk_integrate_transport(const operators::StencilOperator& op,
                                          const grid::GridFunction& u0,
                                          double T, double cfl) {
  return rk_integrate(
      [&op](const Eigen::VectorXcd& v) {
        return Eigen::VectorXcd(-operators::apply(op, v));
      },
      u0, T, cfl, op.spacing);
}

ModalExpansion modal_decompose(const grid::GridFunction& u0,
                               const operators::SchemeParams& params) {
  const grid::BlockGrid& g = u0.grid;
  const Eigen::VectorXcd coef = detail::forward_dft(g, u0.values);
  ModalExpansion e;
  e.grid = g;
  e.params = params;
  e.pairs.reserve(g.N);
  for (int w : symbol::pair_representatives(g.N)) {
    ModalPair pr;
    pr.dec = symbol::decompose_mode(params, w, g.N, g.h);
    const Complex uw = coef[detail::dft_index(w, g.N)];
    const Complex un = coef[detail::dft_index(pr.dec.mode.nu, g.N)];
    const Complex det =
        pr.dec.alpha1 * pr.dec.beta2 - pr.dec.alpha2 * pr.dec.beta1;
    if (std::abs(det) < 1e-8)
      throw std::runtime_error(
          "modal_decompose: near-singular pair basis (omega = " +
          std::to_string(w) + ")");
    pr.d1 = (uw * pr.dec.beta2 - un * pr.dec.alpha2) / det;
    pr.d2 = (un * pr.dec.alpha1 - uw * pr.dec.beta1) / det;
    e.pairs.push_back(std::move(pr));
  }
  return e;
}

grid::GridFunction modal_propagate(const ModalExpansion& e, double t) {
  const grid::BlockGrid& g = e.grid;
  Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(g.size());
  for (const ModalPair& pr : e.pairs) {
    const Complex g1 = pr.d1 * std::exp(pr.dec.Qhat1 * t);
    const Complex g2 = pr.d2 * std::exp(pr.dec.Qhat2 * t);
    coef[detail::dft_index(pr.dec.mode.omega, g.N)] +=
        g1 * pr.dec.alpha1 + g2 * pr.dec.alpha2;
    coef[detail::dft_index(pr.dec.mode.nu, g.N)] +=
        g1 * pr.dec.beta1 + g2 * pr.dec.beta2;
  }
  grid::GridFunction out;
  out.grid = g;
  out.values = detail::inverse_dft(g, coef);
  return out;
}

ScalarExpansion modal_decompose(const grid::GridFunction& u0,
                                const operators::StencilOperator& op) {
  const grid::BlockGrid& g = u0.grid;
  ScalarExpansion e;
  e.grid = g;
  e.coef = detail::forward_dft(g, u0.values);
  e.lambda.resize(g.size());
  const int w = static_cast<int>(op.coefficients.size()) / 2;
  for (int k = -g.N + 1; k <= g.N; ++k) {
    const double kap = 2.0 * std::numbers::pi * k / g.L;
    Complex dhat = 0.0;
    for (int j = -w; j <= w; ++j)
      dhat += op.coefficients[j + w] * std::polar(1.0, kap * j * op.spacing);
    e.lambda[detail::dft_index(k, g.N)] = -dhat;
  }
  return e;
}

grid::GridFunction modal_propagate(const ScalarExpansion& e, double t) {
  Eigen::VectorXcd coef(e.coef.size());
  for (int i = 0; i < e.coef.size(); ++i)
    coef[i] = e.coef[i] * std::exp(e.lambda[i] * t);
  grid::GridFunction out;
  out.grid = e.grid;
  out.values = detail::inverse_dft(e.grid, coef);
  return out;
}

Eigen::MatrixXd dense_expm(const operators::BlockOperator& op, double t) {
  if (op.N > 128)
    throw std::invalid_argument("dense_expm: N too large (max 128)");
  const Eigen::MatrixXd Qt = operators::to_dense(op) * t;
  return Qt.exp();
}

}  // namespace bfd::propagation
