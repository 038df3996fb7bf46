#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bfd/grid.hpp"

namespace bfd::operators {

// Free parameters (c1, c2) of the block scheme.
struct SchemeParams {
  double c1 = 0.0;
  double c2 = 0.0;

  // Design-regime flag: the construction designates c1 >= c2 as the stable
  // wedge (c1 < c2 always produces an eigenvalue with positive real part).
  // The converse does not hold everywhere -- parts of the wedge carry
  // unstable eigenvalues too -- so use symbol::stability_scan for a
  // measured verdict.
  bool claimed_stable_regime() const { return c1 >= c2; }
};

// Periodic block-tridiagonal evolution operator u_t = Q u:
// (Q u)_j = A u_{j-1} + B u_j + C u_{j+1} on 2-vectors per cell.
struct BlockOperator {
  int N = 0;
  double h = 0.0;
  Eigen::Matrix2d A, B, C;
  std::string label;
};

// Periodic centred difference approximation of d/dx on an equispaced set
// of nodes. `coefficients` has odd length, is antisymmetric about the
// centre and already carries the 1/spacing scaling.
struct StencilOperator {
  std::vector<double> coefficients;
  double spacing = 0.0;
  int n_points = 0;
  std::string label;
};

// Block form of the scheme: evolution convention, u_t = Q u.
BlockOperator assemble_bfd(const grid::BlockGrid& g, const SchemeParams& p);

// Literal row-by-row assembly of the derivative approximation underlying
// the scheme (two alternating row patterns over the interleaved nodes).
// This is the +d/dx form; the evolution operator equals its negative.
Eigen::MatrixXd assemble_bfd_rows(const grid::BlockGrid& g,
                                  const SchemeParams& p);

// Standard central difference d/dx of order 2, 4 or 6 on the 2N grid
// nodes (spacing h/2).
StencilOperator assemble_standard_fd(const grid::BlockGrid& g, int order);

Eigen::VectorXcd apply(const BlockOperator& op, const Eigen::VectorXcd& u);
Eigen::VectorXcd apply(const StencilOperator& op, const Eigen::VectorXcd& u);
grid::GridFunction apply(const BlockOperator& op, const grid::GridFunction& u);
grid::GridFunction apply(const StencilOperator& op,
                         const grid::GridFunction& u);

Eigen::MatrixXd to_dense(const BlockOperator& op);
Eigen::MatrixXd to_dense(const StencilOperator& op);

// Truncation study: the max-norm residual of the exact solution inserted
// into the scheme, ||Q f + f'||_inf, split by node parity and fitted
// against h. f and f' are both supplied to keep the order measurement free
// of numerical-differentiation noise.
struct TruncationReport {
  std::vector<double> h;
  std::vector<double> err_minus, err_plus;  // nodes x_{j-1/4} / x_{j+1/4}
  double order_minus = 0.0, order_plus = 0.0;
};

TruncationReport measure_truncation_order(
    const SchemeParams& params, const std::function<double(double)>& f,
    const std::function<double(double)>& fprime, const std::vector<int>& N_list,
    double L = 1.0);

}  // namespace bfd::operators
