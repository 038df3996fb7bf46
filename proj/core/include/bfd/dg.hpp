#pragma once

#include <Eigen/Dense>
#include <functional>

#include "bfd/grid.hpp"
#include "bfd/operators.hpp"

namespace bfd::dg {

// Penalty weights of the generalized weak form. All dimensionless; the h
// and h^2 scalings sit in the weak form itself. All zeros = standard
// upwind DG.
struct PenaltyCoefficients {
  double C1 = 0, C2 = 0, D1 = 0, D2 = 0;
  double E1 = 0, E2 = 0, F1 = 0, F2 = 0;
};

// Per-cell data of the p=1 nodal basis at the quarter points: traces and
// slopes of the two Lagrange hat functions and the element mass matrix.
struct ElementBasis {
  double h = 0.0;
  // [0] = phi_{j-1/4}, [1] = phi_{j+1/4}
  double trace_left[2];   // values at x_{j-1/2}
  double trace_right[2];  // values at x_{j+1/2}
  double slope[2];
  Eigen::Matrix2d M, Minv;

  // phi_i at signed offset s from the cell center, |s| <= h/2.
  double eval(int i, double s) const {
    return trace_left[i] + slope[i] * (s + h / 2.0);
  }
};

ElementBasis element_basis(double h);

// L2 norm of (piecewise-linear element solution - exact) over the whole
// domain, 4-point Gauss quadrature per cell. The element solution on cell j
// is the unique linear through the two quarter-point values, i.e. the nodal
// DG reading of a block grid function. This is the norm in which the DG
// scheme's convergence order is meaningful: quarter-point samples alone
// superconverge transiently and overstate the order on coarse grids.
double reconstruction_error_l2(const grid::GridFunction& u,
                               const std::function<double(double)>& exact);

// Block-circulant cell-update operator in evolution form, same layout as
// operators::BlockOperator.
struct DGBlocks {
  int N = 0;  // 0 until bound to a grid
  double h = 0.0;
  Eigen::Matrix2d A, B, C;
};

// Standard p=1 upwind DG: A = (1/4h)[[-5,15],[1,-3]], B = (1/4h)[[-7,-3],
// [11,-9]], C = 0.
DGBlocks standard_dg_blocks(double h);

// Weak form with the eight penalty terms added to the upwind scheme, then
// multiplied through by M^{-1}.
DGBlocks penalized_dg_blocks(const PenaltyCoefficients& pc, double h);

// Influence-matrix solve for the penalties that make the penalized DG
// blocks equal the block scheme's. Throws if the 8x8 system is singular.
PenaltyCoefficients solve_penalties(double c1, double c2);

// Closed-form solution the solve must reproduce.
PenaltyCoefficients penalty_closed_form(double c1, double c2);

operators::BlockOperator to_operator(const DGBlocks& blocks,
                                     const grid::BlockGrid& g,
                                     const std::string& label);

}  // namespace bfd::dg
