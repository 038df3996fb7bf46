#include "bfd/dg.hpp"

#include <cmath>
#include <stdexcept>

namespace bfd::dg {

ElementBasis element_basis(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("element_basis: need h > 0");
  ElementBasis eb;
  eb.h = h;
  // Local coordinate s in [-h/2, h/2], nodes at s = -+ h/4:
  // phi_{j-1/4}(s) = 1/2 - 2s/h, phi_{j+1/4}(s) = 1/2 + 2s/h.
  eb.trace_left[0] = 1.5;
  eb.trace_left[1] = -0.5;
  eb.trace_right[0] = -0.5;
  eb.trace_right[1] = 1.5;
  eb.slope[0] = -2.0 / h;
  eb.slope[1] = 2.0 / h;
  // Element mass matrix by 2-point Gauss quadrature (exact for quadratics).
  const double sg = h / (2.0 * std::sqrt(3.0));
  const double s[2] = {-sg, sg};
  auto phi = [h](int i, double t) {
    return 0.5 + (i == 0 ? -2.0 : 2.0) * t / h;
  };
  eb.M.setZero();
  for (int q = 0; q < 2; ++q)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        eb.M(i, k) += 0.5 * h * phi(i, s[q]) * phi(k, s[q]);
  eb.Minv = eb.M.inverse();
  return eb;
}

namespace {

// Local weak-form row for cell j against its two test functions, expressed
// over the six dofs (u_{j-1,1}, u_{j-1,2}, u_{j,1}, u_{j,2}, u_{j+1,1},
// u_{j+1,2}). Returns the 2x6 update matrix before applying M^{-1}.
Eigen::Matrix<double, 2, 6> local_rows(const PenaltyCoefficients& pc,
                                       const ElementBasis& eb) {
  using Row6 = Eigen::Matrix<double, 1, 6>;
  const double h = eb.h;

  auto trace = [&eb](int cell, bool right) {
    Row6 r = Row6::Zero();
    const double* tr = right ? eb.trace_right : eb.trace_left;
    r(2 * (cell + 1)) = tr[0];
    r(2 * (cell + 1) + 1) = tr[1];
    return r;
  };
  auto slope = [&eb](int cell) {
    Row6 r = Row6::Zero();
    r(2 * (cell + 1)) = eb.slope[0];
    r(2 * (cell + 1) + 1) = eb.slope[1];
    return r;
  };

  // Upwind ("-") traces and jumps at the two interfaces of cell 0.
  const Row6 um_R = trace(0, true), up_R = trace(1, false);
  const Row6 um_L = trace(-1, true), up_L = trace(0, false);
  const Row6 uxm_R = slope(0), uxp_R = slope(1);
  const Row6 uxm_L = slope(-1), uxp_L = slope(0);
  const Row6 jmp_R = up_R - um_R, jmp_L = up_L - um_L;
  const Row6 jmpx_R = uxp_R - uxm_R, jmpx_L = uxp_L - uxm_L;

  // Volume term  int u phi_k' dx  by 2-point Gauss.
  const double sg = h / (2.0 * std::sqrt(3.0));
  const double s[2] = {-sg, sg};
  auto phi = [h](int i, double t) {
    return 0.5 + (i == 0 ? -2.0 : 2.0) * t / h;
  };

  Eigen::Matrix<double, 2, 6> R = Eigen::Matrix<double, 2, 6>::Zero();
  for (int k = 0; k < 2; ++k) {
    const double vL = eb.trace_left[k], vR = eb.trace_right[k];
    const double vx = eb.slope[k];
    Row6 r = Row6::Zero();
    for (int q = 0; q < 2; ++q) {
      r(2) += 0.5 * h * phi(0, s[q]) * vx;
      r(3) += 0.5 * h * phi(1, s[q]) * vx;
    }
    r -= um_R * vR;
    r += um_L * vL;
    r += (pc.C1 * jmp_R + h * pc.C2 * jmpx_R) * vR;
    r -= (pc.D1 * jmp_L + h * pc.D2 * jmpx_L) * vL;
    r += (h * pc.E1 * jmp_R + h * h * pc.E2 * jmpx_R) * vx;
    r -= (h * pc.F1 * jmp_L + h * h * pc.F2 * jmpx_L) * vx;
    R.row(k) = r;
  }
  return R;
}

}  // namespace

DGBlocks standard_dg_blocks(double h) {
  return penalized_dg_blocks(PenaltyCoefficients{}, h);
}

DGBlocks penalized_dg_blocks(const PenaltyCoefficients& pc, double h) {
  const ElementBasis eb = element_basis(h);
  const Eigen::Matrix<double, 2, 6> R = eb.Minv * local_rows(pc, eb);
  DGBlocks out;
  out.h = h;
  out.A = R.block<2, 2>(0, 0);
  out.B = R.block<2, 2>(0, 2);
  out.C = R.block<2, 2>(0, 4);
  return out;
}

PenaltyCoefficients penalty_closed_form(double c1, double c2) {
  PenaltyCoefficients pc;
  pc.C1 = pc.D1 = -0.5;
  pc.C2 = pc.D2 = -1.0 / 12.0;
  pc.E2 = pc.F2 = (c1 - c2) / 72.0;
  pc.E1 = (2.0 * c1 - 6.0 * c2 + 1.0) / 36.0;
  pc.F1 = (-6.0 * c1 + 2.0 * c2 + 1.0) / 36.0;
  return pc;
}

namespace {

Eigen::Matrix<double, 12, 1> vec_blocks(const DGBlocks& b) {
  Eigen::Matrix<double, 12, 1> v;
  int i = 0;
  for (const auto* m : {&b.A, &b.B, &b.C})
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) v(i++) = (*m)(r, c);
  return v;
}

}  // namespace

PenaltyCoefficients solve_penalties(double c1, double c2) {
  const double h = 1.0;  // all block entries scale uniformly with 1/h
  const auto base = vec_blocks(standard_dg_blocks(h));

  Eigen::Matrix<double, 12, 8> infl;
  for (int i = 0; i < 8; ++i) {
    PenaltyCoefficients pc;
    double* fields[8] = {&pc.C1, &pc.C2, &pc.D1, &pc.D2,
                         &pc.E1, &pc.E2, &pc.F1, &pc.F2};
    *fields[i] = 1.0;
    infl.col(i) = vec_blocks(penalized_dg_blocks(pc, h)) - base;
  }

  grid::BlockGrid g = grid::build_grid(4, 4.0 * h);  // any grid with this h
  const operators::BlockOperator bfd =
      operators::assemble_bfd(g, {c1, c2});
  DGBlocks target;
  target.h = h;
  target.A = bfd.A;
  target.B = bfd.B;
  target.C = bfd.C;
  const Eigen::Matrix<double, 12, 1> rhs = vec_blocks(target) - base;

  Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 12, 8>> qr(infl);
  if (qr.rank() < 8)
    throw std::runtime_error("solve_penalties: singular influence matrix");
  const Eigen::Matrix<double, 8, 1> x = qr.solve(rhs);
  const double resid = (infl * x - rhs).norm();
  if (resid > 1e-10)
    throw std::runtime_error(
        "solve_penalties: no exact penalty representation (residual " +
        std::to_string(resid) + ")");
  PenaltyCoefficients pc;
  pc.C1 = x(0);
  pc.C2 = x(1);
  pc.D1 = x(2);
  pc.D2 = x(3);
  pc.E1 = x(4);
  pc.E2 = x(5);
  pc.F1 = x(6);
  pc.F2 = x(7);
  return pc;
}

double reconstruction_error_l2(const grid::GridFunction& u,
                               const std::function<double(double)>& exact) {
  const auto& g = u.grid;
  const ElementBasis eb = element_basis(g.h);
  // 4-point Gauss-Legendre nodes/weights on [-1, 1].
  static constexpr double kX[4] = {-0.8611363115940526, -0.3399810435848563,
                                   0.3399810435848563, 0.8611363115940526};
  static constexpr double kW[4] = {0.3478548451374538, 0.6521451548625461,
                                   0.6521451548625461, 0.3478548451374538};
  double acc = 0.0;
  for (int j = 0; j < g.N; ++j) {
    const double xc = g.h * j + g.h / 2.0;
    const std::complex<double> um = u.values[2 * j];
    const std::complex<double> up = u.values[2 * j + 1];
    for (int q = 0; q < 4; ++q) {
      const double s = kX[q] * g.h / 2.0;
      const std::complex<double> uh = um * eb.eval(0, s) + up * eb.eval(1, s);
      acc += kW[q] * (g.h / 2.0) * std::norm(uh - exact(xc + s));
    }
  }
  return std::sqrt(acc);
}

operators::BlockOperator to_operator(const DGBlocks& blocks,
                                     const grid::BlockGrid& g,
                                     const std::string& label) {
  if (std::abs(blocks.h - g.h) > 1e-12 * g.h)
    throw std::invalid_argument("to_operator: block h does not match grid");
  operators::BlockOperator op;
  op.N = g.N;
  op.h = g.h;
  op.A = blocks.A;
  op.B = blocks.B;
  op.C = blocks.C;
  op.label = label;
  return op;
}

}  // namespace bfd::dg
