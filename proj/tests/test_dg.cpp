#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "bfd/dg.hpp"
#include "bfd/fit.hpp"
#include "bfd/grid.hpp"
#include "bfd/operators.hpp"
#include "bfd/propagation.hpp"
#include "helpers.hpp"

using namespace bfd;
using std::numbers::pi;

namespace {

double block_diff(const dg::DGBlocks& a, const dg::DGBlocks& b) {
  return std::max({(a.A - b.A).cwiseAbs().maxCoeff(),
                   (a.B - b.B).cwiseAbs().maxCoeff(),
                   (a.C - b.C).cwiseAbs().maxCoeff()});
}

double pc_diff(const dg::PenaltyCoefficients& a,
               const dg::PenaltyCoefficients& b) {
  return std::max({std::abs(a.C1 - b.C1), std::abs(a.C2 - b.C2),
                   std::abs(a.D1 - b.D1), std::abs(a.D2 - b.D2),
                   std::abs(a.E1 - b.E1), std::abs(a.E2 - b.E2),
                   std::abs(a.F1 - b.F1), std::abs(a.F2 - b.F2)});
}

dg::PenaltyCoefficients random_pc() {
  dg::PenaltyCoefficients pc;
  for (double* f : {&pc.C1, &pc.C2, &pc.D1, &pc.D2, &pc.E1, &pc.E2, &pc.F1,
                    &pc.F2})
    *f = testutil::urand(-1.0, 1.0);
  return pc;
}

}  // namespace

TEST_SUITE("dg") {

TEST_CASE("element basis: traces, slopes, Kronecker nodes, mass matrix") {
  for (double h : {1.0, 0.25, 1.0 / 48.0}) {
    const auto eb = dg::element_basis(h);
    CHECK(eb.trace_left[0] == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(eb.trace_left[1] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(eb.trace_right[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(eb.trace_right[1] == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(eb.slope[0] == doctest::Approx(-2.0 / h).epsilon(1e-14));
    CHECK(eb.slope[1] == doctest::Approx(2.0 / h).epsilon(1e-14));

    // Reconstruct the linears from their left trace and slope, then check
    // the Kronecker property at the two nodes s = -+h/4.
    auto phi = [&](int i, double s) {
      return (i == 0 ? eb.trace_left[0] : eb.trace_left[1]) +
             eb.slope[i] * (s + h / 2.0);
    };
    CHECK(phi(0, -h / 4) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(phi(0, h / 4) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(phi(1, -h / 4) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(phi(1, h / 4) == doctest::Approx(1.0).epsilon(1e-14));

    // Partition of unity across the whole cell.
    for (double s : {-h / 2, -h / 3, 0.0, h / 5, h / 2})
      CHECK(phi(0, s) + phi(1, s) == doctest::Approx(1.0).epsilon(1e-14));

    Eigen::Matrix2d Mref;
    Mref << 7.0, -1.0, -1.0, 7.0;
    Mref *= h / 12.0;
    CHECK((eb.M - Mref).cwiseAbs().maxCoeff() < 1e-15 * h);
    CHECK((eb.Minv * eb.M - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <
          1e-13);
  }
  CHECK_THROWS_AS((void)dg::element_basis(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)dg::element_basis(-1.0), std::invalid_argument);
}

TEST_CASE("standard upwind blocks match the closed-form read-off") {
  for (double h : {1.0, 0.125}) {
    const auto b = dg::standard_dg_blocks(h);
    Eigen::Matrix2d Aref, Bref;
    Aref << -5.0, 15.0, 1.0, -3.0;
    Bref << -7.0, -3.0, 11.0, -9.0;
    Aref /= 4.0 * h;
    Bref /= 4.0 * h;
    CHECK((b.A - Aref).cwiseAbs().maxCoeff() < 1e-13 / h);
    CHECK((b.B - Bref).cwiseAbs().maxCoeff() < 1e-13 / h);
    CHECK(b.C.cwiseAbs().maxCoeff() < 1e-13 / h);
  }
}

TEST_CASE("zero penalties reproduce the standard scheme") {
  const auto std_b = dg::standard_dg_blocks(0.5);
  const auto pen_b = dg::penalized_dg_blocks(dg::PenaltyCoefficients{}, 0.5);
  CHECK(block_diff(std_b, pen_b) == 0.0);
}

TEST_CASE("penalties enter the blocks linearly") {
  const double h = 0.25;
  const auto base = dg::standard_dg_blocks(h);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p1 = random_pc();
    const auto p2 = random_pc();
    dg::PenaltyCoefficients sum;
    sum.C1 = p1.C1 + p2.C1;
    sum.C2 = p1.C2 + p2.C2;
    sum.D1 = p1.D1 + p2.D1;
    sum.D2 = p1.D2 + p2.D2;
    sum.E1 = p1.E1 + p2.E1;
    sum.E2 = p1.E2 + p2.E2;
    sum.F1 = p1.F1 + p2.F1;
    sum.F2 = p1.F2 + p2.F2;
    const auto b1 = dg::penalized_dg_blocks(p1, h);
    const auto b2 = dg::penalized_dg_blocks(p2, h);
    const auto bs = dg::penalized_dg_blocks(sum, h);
    Eigen::Matrix2d dA = (bs.A - base.A) - (b1.A - base.A) - (b2.A - base.A);
    Eigen::Matrix2d dB = (bs.B - base.B) - (b1.B - base.B) - (b2.B - base.B);
    Eigen::Matrix2d dC = (bs.C - base.C) - (b1.C - base.C) - (b2.C - base.C);
    CHECK(dA.cwiseAbs().maxCoeff() < 1e-12 / h);
    CHECK(dB.cwiseAbs().maxCoeff() < 1e-12 / h);
    CHECK(dC.cwiseAbs().maxCoeff() < 1e-12 / h);
  }
}

TEST_CASE("all penalized operators annihilate constants") {
  const auto g = grid::build_grid(6, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const auto b = dg::penalized_dg_blocks(random_pc(), g.h);
    const auto op = dg::to_operator(b, g, "dg-random");
    const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(g.size());
    CHECK(operators::apply(op, ones).cwiseAbs().maxCoeff() < 1e-12 / g.h);
  }
}

TEST_CASE("penalty contributions vanish on a globally linear profile") {
  // For the restriction of one continuous linear a + b x (continuous slope
  // across interfaces), every jump vanishes, so arbitrary penalties leave the
  // cell update unchanged. Checked locally on a 3-cell window to keep the
  // profile single-valued (no periodic wrap).
  const double h = 0.5;
  const auto base = dg::standard_dg_blocks(h);
  for (int trial = 0; trial < 5; ++trial) {
    const double a = testutil::urand(-2.0, 2.0);
    const double b = testutil::urand(-2.0, 2.0);
    const auto pen = dg::penalized_dg_blocks(random_pc(), h);
    // Nodes of cells j-1, j, j+1 with centers at -h, 0, h.
    Eigen::Vector2d um1(a + b * (-h - h / 4), a + b * (-h + h / 4));
    Eigen::Vector2d u0(a + b * (-h / 4), a + b * (h / 4));
    Eigen::Vector2d up1(a + b * (h - h / 4), a + b * (h + h / 4));
    const Eigen::Vector2d pen_update =
        pen.A * um1 + pen.B * u0 + pen.C * up1;
    const Eigen::Vector2d std_update =
        base.A * um1 + base.B * u0 + base.C * up1;
    CHECK((pen_update - std_update).cwiseAbs().maxCoeff() < 1e-12 / h);
  }
}

TEST_CASE("influence-matrix solve reproduces the closed form") {
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = testutil::random_params();
    const auto solved = dg::solve_penalties(p.c1, p.c2);
    const auto closed = dg::penalty_closed_form(p.c1, p.c2);
    CHECK(pc_diff(solved, closed) < 1e-12);
  }
}

TEST_CASE("closed-form values at the reference parameter pairs") {
  const auto half = dg::penalty_closed_form(0.5, 0.5);
  CHECK(half.C1 == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(half.D1 == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(half.C2 == doctest::Approx(-1.0 / 12).epsilon(1e-14));
  CHECK(half.D2 == doctest::Approx(-1.0 / 12).epsilon(1e-14));
  CHECK(half.E1 == doctest::Approx(-1.0 / 36).epsilon(1e-14));
  CHECK(half.F1 == doctest::Approx(-1.0 / 36).epsilon(1e-14));
  CHECK(half.E2 == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(half.F2 == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

  const auto zero = dg::penalty_closed_form(0.0, 0.0);
  CHECK(zero.E1 == doctest::Approx(1.0 / 36).epsilon(1e-14));
  CHECK(zero.F1 == doctest::Approx(1.0 / 36).epsilon(1e-14));
  CHECK(zero.E2 == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(zero.F2 == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("penalized blocks equal the block scheme exactly") {
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = testutil::random_params();
    for (double h : {1.0, 1.0 / 48.0}) {
      const auto pen =
          dg::penalized_dg_blocks(dg::penalty_closed_form(p.c1, p.c2), h);
      const auto g = grid::build_grid(4, 4.0 * h);
      const auto bfd = operators::assemble_bfd(g, p);
      dg::DGBlocks target;
      target.h = h;
      target.A = bfd.A;
      target.B = bfd.B;
      target.C = bfd.C;
      CHECK(block_diff(pen, target) < 1e-13 / h);
    }
  }
}

TEST_CASE("zero-parameter penalties recover central differencing in block form") {
  const double h = 0.25;
  const auto pen = dg::penalized_dg_blocks(dg::penalty_closed_form(0, 0), h);
  const auto g = grid::build_grid(4, 4.0 * h);
  const auto bfd = operators::assemble_bfd(g, {0.0, 0.0});
  CHECK((pen.A - bfd.A).cwiseAbs().maxCoeff() < 1e-13 / h);
  CHECK((pen.B - bfd.B).cwiseAbs().maxCoeff() < 1e-13 / h);
  CHECK((pen.C - bfd.C).cwiseAbs().maxCoeff() < 1e-13 / h);
}

TEST_CASE("to_operator binds blocks to a grid and rejects mismatched h") {
  const auto g = grid::build_grid(8, 1.0);
  const auto b = dg::standard_dg_blocks(g.h);
  const auto op = dg::to_operator(b, g, "dg");
  CHECK(op.N == 8);
  CHECK(op.label == "dg");
  CHECK((op.A - b.A).cwiseAbs().maxCoeff() == 0.0);

  const auto wrong = dg::standard_dg_blocks(2.0 * g.h);
  CHECK_THROWS_AS((void)dg::to_operator(wrong, g, "dg"), std::invalid_argument);
}

TEST_CASE("standard upwind DG converges at second order in element L2") {
  auto f0 = [](double x) { return std::exp(std::cos(2 * pi * x)); };
  auto exact = [&](double x) {
    double xt = std::fmod(x - 1.0, 1.0);
    if (xt < 0) xt += 1.0;
    return f0(xt);
  };
  std::vector<double> hs, el2, nodal;
  for (int N : {48, 72, 96, 144}) {
    const auto g = grid::build_grid(N, 1.0);
    const auto op = dg::to_operator(dg::standard_dg_blocks(g.h), g, "dg");
    const auto u0 = grid::sample(g, f0);
    const auto uT = propagation::rk_integrate(op, u0, 1.0, 0.2);
    hs.push_back(g.h);
    el2.push_back(dg::reconstruction_error_l2(uT, exact));
    nodal.push_back(
        grid::error_norms(uT, grid::exact_solution(g, f0, 1.0)).l2);
  }
  // The element solution's L2 error is cleanly second order.
  CHECK(fit::loglog(hs, el2).slope == doctest::Approx(2.0).epsilon(0.1));
  // The quarter-point samples superconverge transiently on these grids
  // (their fitted slope sits above 2 and decays toward 2 with refinement),
  // so only bracket the nodal figure.
  const double nodal_slope = fit::loglog(hs, nodal).slope;
  CHECK(nodal_slope > 1.9);
  CHECK(nodal_slope < 2.6);
}

TEST_CASE("reconstruction error: exact for linears, h^2 for curvature") {
  // The element basis reproduces any linear exactly, so sampling a global
  // linear and comparing against it gives zero error.
  const auto g = grid::build_grid(16, 2.0);
  grid::GridFunction u;
  u.grid = g;
  u.values.resize(g.size());
  for (int n = 0; n < g.size(); ++n) u.values[n] = 3.0 + 0.25 * g.nodes[n];
  CHECK(dg::reconstruction_error_l2(
            u, [](double x) { return 3.0 + 0.25 * x; }) < 1e-13);

  // Sampling a smooth non-linear function: the in-cell interpolation error
  // scales like h^2 (classic piecewise-linear interpolation bound).
  double prev = 0.0;
  for (int N : {8, 16, 32}) {
    const auto gN = grid::build_grid(N, 1.0);
    auto f = [](double x) { return std::sin(2 * pi * x); };
    const double e = dg::reconstruction_error_l2(grid::sample(gN, f), f);
    if (prev > 0) CHECK(prev / e == doctest::Approx(4.0).epsilon(0.05));
    prev = e;
  }
}

}  // TEST_SUITE
