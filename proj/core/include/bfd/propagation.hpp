#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "bfd/grid.hpp"
#include "bfd/operators.hpp"
#include "bfd/symbol.hpp"

namespace bfd::propagation {

using grid::Complex;

// ---------------------------------------------------------------------------
// Explicit Runge-Kutta integration of u_t = Q u.
// ---------------------------------------------------------------------------

struct RKTableau {
  int stages = 0;
  int order = 0;
  std::vector<double> c, b;
  std::vector<std::vector<double>> a;  // a[i] holds row i (i entries)

  // Butcher's 7-stage, order-6 explicit tableau.
  static const RKTableau& butcher6();
};

using Rhs = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

// Fixed-step integration of u_t = rhs(u) from 0 to T. The step is
// dt = cfl * step_scale rounded down so that T/dt is an integer; no
// final-time interpolation. Throws on NaN/overflow (unstable scheme or
// cfl too large).
grid::GridFunction rk_integrate(const Rhs& rhs, const grid::GridFunction& u0,
                                double T, double cfl, double step_scale,
                                const RKTableau& tab = RKTableau::butcher6());

// u_t = Q u for the block evolution operator; step scale h/2.
grid::GridFunction rk_integrate(const operators::BlockOperator& op,
                                const grid::GridFunction& u0, double T,
                                double cfl);

// Transport u_t = -D u for a d/dx stencil approximation D; step scale = node
// spacing of the stencil.
grid::GridFunction rk_integrate_transport(const operators::StencilOperator& op,
                                          const grid::GridFunction& u0,
                                          double T, double cfl);

// ---------------------------------------------------------------------------
// Exact modal propagation, u(t) = exp(Q t) u0 via the symbol eigenbasis.
// ---------------------------------------------------------------------------

struct ModalPair {
  symbol::SymbolDecomposition dec;
  Complex d1, d2;
};

struct ModalExpansion {
  grid::BlockGrid grid;
  operators::SchemeParams params;
  std::vector<ModalPair> pairs;
};

// Projects u0 onto the pair eigenvectors: DFT front-end, then per pair the
// 2x2 solve [alpha1 alpha2; beta1 beta2] (d1, d2)^T = (u_hat(omega),
// u_hat(nu))^T. Throws if a pair system is near-singular (cannot happen
// while cos theta < 0.4).
ModalExpansion modal_decompose(const grid::GridFunction& u0,
                               const operators::SchemeParams& params);

grid::GridFunction modal_propagate(const ModalExpansion& e, double t);

// Scalar counterpart for circulant stencil operators: Fourier modes are
// eigenvectors with evolution eigenvalue -D_hat(kappa_k).
struct ScalarExpansion {
  grid::BlockGrid grid;
  Eigen::VectorXcd coef;    // DFT bins -N+1..N
  Eigen::VectorXcd lambda;  // evolution eigenvalue per bin
};

ScalarExpansion modal_decompose(const grid::GridFunction& u0,
                                const operators::StencilOperator& op);

grid::GridFunction modal_propagate(const ScalarExpansion& e, double t);

// Dense exp(Q t) by Pade scaling-and-squaring; oracle for the modal route.
// Requires N <= 128.
Eigen::MatrixXd dense_expm(const operators::BlockOperator& op, double t);

}  // namespace bfd::propagation
