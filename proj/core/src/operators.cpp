#include "bfd/operators.hpp"

#include <functional>
#include <stdexcept>

#include "bfd/fit.hpp"

namespace bfd::operators {

BlockOperator assemble_bfd(const grid::BlockGrid& g, const SchemeParams& p) {
  const double c1 = p.c1, c2 = p.c2, s = 1.0 / (6.0 * g.h);
  BlockOperator op;
  op.N = g.N;
  op.h = g.h;
  op.A << -1 - c1, 8 + 4 * c1 - c2,
          c1, -1 - 4 * c1 + c2;
  op.B << -6 * c1 + 4 * c2, -8 + 4 * c1 - 6 * c2,
          8 + 6 * c1 - 4 * c2, -4 * c1 + 6 * c2;
  op.C << 1 - c1 + 4 * c2, -c2,
          -8 + c1 - 4 * c2, 1 + c2;
  op.A *= s;
  op.B *= s;
  op.C *= s;
  op.label = "bfd";
  return op;
}

Eigen::MatrixXd assemble_bfd_rows(const grid::BlockGrid& g,
                                  const SchemeParams& p) {
  const int n = 2 * g.N;
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  // Row patterns in units of the node spacing h/2; the bracketed entry in
  // the comments marks the diagonal. Even rows sit at x_j - h/4, odd rows
  // at x_j + h/4.
  const double cen[5] = {1, -8, 0, 8, -1};               // offsets -2..2
  const double c1e[6] = {1, -4, 6, -4, 1, 0};            // even, offsets -2..3
  const double c2e[6] = {0, 1, -4, 6, -4, 1};            // even, offsets -2..3
  const double c1o[6] = {-1, 4, -6, 4, -1, 0};           // odd, offsets -3..2
  const double c2o[6] = {0, -1, 4, -6, 4, -1};           // odd, offsets -3..2
  auto wrap = [n](int i) { return ((i % n) + n) % n; };
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 5; ++k) D(i, wrap(i + k - 2)) += cen[k];
    if (i % 2 == 0) {
      for (int k = 0; k < 6; ++k) {
        D(i, wrap(i + k - 2)) += p.c1 * c1e[k] + p.c2 * c2e[k];
      }
    } else {
      for (int k = 0; k < 6; ++k) {
        D(i, wrap(i + k - 3)) += p.c1 * c1o[k] + p.c2 * c2o[k];
      }
    }
  }
  return D / (6.0 * g.h);
}

StencilOperator assemble_standard_fd(const grid::BlockGrid& g, int order) {
  StencilOperator op;
  op.spacing = g.h / 2.0;
  const double d = op.spacing;
  switch (order) {
    case 2:
      op.coefficients = {-1.0 / 2, 0.0, 1.0 / 2};
      break;
    case 4:
      op.coefficients = {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
      break;
    case 6:
      op.coefficients = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0,
                         3.0 / 4,   -3.0 / 20, 1.0 / 60};
      break;
    default:
      throw std::invalid_argument("assemble_standard_fd: order must be 2, 4 or 6");
  }
  for (auto& c : op.coefficients) c /= d;
  op.n_points = 2 * g.N;
  op.label = "fd" + std::to_string(order);
  return op;
}

Eigen::VectorXcd apply(const BlockOperator& op, const Eigen::VectorXcd& u) {
  const int N = op.N;
  if (u.size() != 2 * N)
    throw std::invalid_argument("apply: vector size does not match operator");
  Eigen::VectorXcd out(2 * N);
  const Eigen::Matrix2cd A = op.A.cast<grid::Complex>();
  const Eigen::Matrix2cd B = op.B.cast<grid::Complex>();
  const Eigen::Matrix2cd C = op.C.cast<grid::Complex>();
  for (int j = 0; j < N; ++j) {
    const int jm = (j + N - 1) % N, jp = (j + 1) % N;
    out.segment<2>(2 * j) = A * u.segment<2>(2 * jm) +
                            B * u.segment<2>(2 * j) +
                            C * u.segment<2>(2 * jp);
  }
  return out;
}

Eigen::VectorXcd apply(const StencilOperator& op, const Eigen::VectorXcd& u) {
  const int n = static_cast<int>(u.size());
  if (op.n_points != 0 && op.n_points != n)
    throw std::invalid_argument("apply: vector size does not match stencil");
  const int w = static_cast<int>(op.coefficients.size()) / 2;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i) {
    grid::Complex acc = 0.0;
    for (int k = -w; k <= w; ++k)
      acc += op.coefficients[k + w] * u[(i + k + n) % n];
    out[i] = acc;
  }
  return out;
}

grid::GridFunction apply(const BlockOperator& op, const grid::GridFunction& u) {
  grid::GridFunction out;
  out.grid = u.grid;
  out.values = apply(op, u.values);
  return out;
}

grid::GridFunction apply(const StencilOperator& op,
                         const grid::GridFunction& u) {
  grid::GridFunction out;
  out.grid = u.grid;
  out.values = apply(op, u.values);
  return out;
}

Eigen::MatrixXd to_dense(const BlockOperator& op) {
  const int N = op.N;
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (int j = 0; j < N; ++j) {
    const int jm = (j + N - 1) % N, jp = (j + 1) % N;
    Q.block<2, 2>(2 * j, 2 * jm) += op.A;
    Q.block<2, 2>(2 * j, 2 * j) += op.B;
    Q.block<2, 2>(2 * j, 2 * jp) += op.C;
  }
  return Q;
}

Eigen::MatrixXd to_dense(const StencilOperator& op) {
  const int n = op.n_points;
  if (n <= 0) throw std::invalid_argument("to_dense: stencil not bound to grid");
  const int w = static_cast<int>(op.coefficients.size()) / 2;
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = -w; k <= w; ++k)
      D(i, (i + k + n) % n) += op.coefficients[k + w];
  return D;
}

TruncationReport measure_truncation_order(
    const SchemeParams& params, const std::function<double(double)>& f,
    const std::function<double(double)>& fprime,
    const std::vector<int>& N_list, double L) {
  if (N_list.size() < 4)
    throw std::invalid_argument(
        "measure_truncation_order: need at least 4 grid sizes");
  TruncationReport rep;
  for (int N : N_list) {
    const grid::BlockGrid g = grid::build_grid(N, L);
    const BlockOperator op = assemble_bfd(g, params);
    const grid::GridFunction u = grid::sample(g, f);
    const Eigen::VectorXcd qu = apply(op, u.values);
    double em = 0.0, ep = 0.0;
    for (int n = 0; n < g.size(); ++n) {
      // Evolution convention: Q f approximates -f', so the truncation
      // residual is Q f + f'.
      const double r = std::abs(qu[n] + grid::Complex(fprime(g.nodes[n])));
      (n % 2 == 0 ? em : ep) = std::max(n % 2 == 0 ? em : ep, r);
    }
    rep.h.push_back(g.h);
    rep.err_minus.push_back(em);
    rep.err_plus.push_back(ep);
  }
  rep.order_minus = fit::loglog(rep.h, rep.err_minus).slope;
  rep.order_plus = fit::loglog(rep.h, rep.err_plus).slope;
  return rep;
}

}  // namespace bfd::operators
