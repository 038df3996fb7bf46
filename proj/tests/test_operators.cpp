#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"

#include "bfd/fit.hpp"
#include "bfd/grid.hpp"
#include "bfd/operators.hpp"
#include "helpers.hpp"

using namespace bfd;
using std::numbers::pi;

TEST_SUITE("operators") {

TEST_CASE("bfd blocks at c1=c2=0") {
  const auto g = grid::build_grid(8, 1.0);
  const auto op = operators::assemble_bfd(g, {0.0, 0.0});
  const double f = 1.0 / (6 * g.h);
  Eigen::Matrix2d A, B, C;
  A << -1, 8, 0, -1;
  B << 0, -8, 8, 0;
  C << 1, 0, -8, 1;
  CHECK((op.A - f * A).cwiseAbs().maxCoeff() < 1e-14 * f);
  CHECK((op.B - f * B).cwiseAbs().maxCoeff() < 1e-14 * f);
  CHECK((op.C - f * C).cwiseAbs().maxCoeff() < 1e-14 * f);
}

TEST_CASE("stencil assembly equals block assembly") {
  const auto g = grid::build_grid(8, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = testutil::random_params();
    const Eigen::MatrixXd blockform =
        operators::to_dense(operators::assemble_bfd(g, p));
    const Eigen::MatrixXd rows = operators::assemble_bfd_rows(g, p);
    const double scale = blockform.cwiseAbs().maxCoeff();
    // The row-by-row stencil builds +d/dx; the evolution operator is its
    // negative.
    CHECK((blockform + rows).cwiseAbs().maxCoeff() < 1e-14 * scale);
  }
}

TEST_CASE("block-circulant structure and constant annihilation") {
  const auto g = grid::build_grid(6, 2.0);
  for (double c1 : {-1.0, -0.5, 0.0, 0.5, 1.0})
    for (double c2 : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const auto op = operators::assemble_bfd(g, {c1, c2});
      const Eigen::MatrixXd Q = operators::to_dense(op);

      // Every block-row is the cyclic shift of the first.
      for (int j = 1; j < g.N; ++j)
        for (int k = 0; k < g.N; ++k) {
          const int k0 = ((k - j) % g.N + g.N) % g.N;
          CHECK((Q.block<2, 2>(2 * j, 2 * k) - Q.block<2, 2>(0, 2 * k0))
                    .cwiseAbs()
                    .maxCoeff() == 0.0);
        }

      CHECK(Q.rowwise().sum().cwiseAbs().maxCoeff() < 1e-13 / g.h);
      CHECK(Q.trace() == doctest::Approx(g.N * op.B.trace()).epsilon(1e-13));

      const auto ones = grid::sample(g, [](double) { return 1.0; });
      const auto qa = operators::apply(op, ones);
      CHECK(grid::linf_norm(qa) < 1e-13 / g.h);
    }
}

TEST_CASE("c1=c2=0 reduces to the fourth-order stencil") {
  const auto g = grid::build_grid(8, 1.0);
  const Eigen::MatrixXd Q =
      operators::to_dense(operators::assemble_bfd(g, {0.0, 0.0}));
  const Eigen::MatrixXd D4 =
      operators::to_dense(operators::assemble_standard_fd(g, 4));
  CHECK((Q + D4).cwiseAbs().maxCoeff() < 1e-13 / g.h);
}

TEST_CASE("standard stencils") {
  const auto g = grid::build_grid(8, 1.0);
  const double d = g.h / 2;

  const auto s2 = operators::assemble_standard_fd(g, 2);
  const auto s4 = operators::assemble_standard_fd(g, 4);
  const auto s6 = operators::assemble_standard_fd(g, 6);
  CHECK(s2.spacing == d);
  CHECK(s2.n_points == g.size());
  CHECK(s2.coefficients.size() == 3);
  CHECK(s4.coefficients.size() == 5);
  CHECK(s6.coefficients.size() == 7);
  CHECK(s6.coefficients[0] == doctest::Approx(-1.0 / (60 * d)).epsilon(1e-15));
  CHECK(s6.coefficients[2] == doctest::Approx(-45.0 / (60 * d)).epsilon(1e-15));

  for (const auto* s : {&s2, &s4, &s6}) {
    const int m = static_cast<int>(s->coefficients.size());
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      sum += s->coefficients[i];
      CHECK(s->coefficients[i] ==
            doctest::Approx(-s->coefficients[m - 1 - i]).epsilon(1e-15));
    }
    CHECK(std::abs(sum) < 1e-12 / g.h);
  }

  CHECK_THROWS_AS((void)operators::assemble_standard_fd(g, 3),
                  std::invalid_argument);
}

TEST_CASE("stencil differentiates trig data at the designed order") {
  // Fourier symbol of the order-q central stencil deviates from i*kappa by
  // O(delta^q); check the error slope on sin(2 pi x).
  for (int order : {2, 4, 6}) {
    std::vector<double> hs, errs;
    for (int N : {8, 12, 16, 24, 32}) {
      const auto g = grid::build_grid(N, 1.0);
      const auto s = operators::assemble_standard_fd(g, order);
      const auto u = grid::sample(g, [](double x) { return std::sin(2 * pi * x); });
      const auto du = operators::apply(s, u);
      double worst = 0.0;
      for (int n = 0; n < g.size(); ++n)
        worst = std::max(worst,
                         std::abs(du.values[n] - 2 * pi * std::cos(2 * pi * g.nodes[n])));
      hs.push_back(g.h);
      errs.push_back(worst);
    }
    const auto f = fit::loglog(hs, errs);
    CHECK(f.slope == doctest::Approx(order).epsilon(0.05));
  }
}

TEST_CASE("apply matches the dense product") {
  const auto g = grid::build_grid(6, 1.3);
  const auto p = testutil::random_params();
  const auto op = operators::assemble_bfd(g, p);
  const auto v = testutil::random_complex_vector(g.size());

  const Eigen::VectorXcd lhs = operators::apply(op, v);
  const Eigen::VectorXcd rhs = operators::to_dense(op) * v;
  CHECK(testutil::rel_diff(lhs, rhs) < 1e-13);

  const auto s = operators::assemble_standard_fd(g, 6);
  const Eigen::VectorXcd lhs2 = operators::apply(s, v);
  const Eigen::VectorXcd rhs2 = operators::to_dense(s) * v;
  CHECK(testutil::rel_diff(lhs2, rhs2) < 1e-13);
}

TEST_CASE("evolution operator acts like -d/dx on smooth waves") {
  const auto g = grid::build_grid(64, 1.0);
  const auto op = operators::assemble_bfd(g, {0.0, 0.0});
  grid::GridFunction wave;
  wave.grid = g;
  wave.values.resize(g.size());
  const double kappa = 2 * pi;
  for (int n = 0; n < g.size(); ++n)
    wave.values[n] = std::polar(1.0, kappa * g.nodes[n]);
  const auto qw = operators::apply(op, wave);
  double worst = 0.0;
  for (int n = 0; n < g.size(); ++n)
    worst = std::max(worst, std::abs(qw.values[n] -
                                     std::complex<double>(0, -kappa) * wave.values[n]));
  CHECK(worst < 1e-4);  // O(h^4) at N=64
  CHECK(worst > 1e-9);  // but not exact
}

TEST_CASE("truncation order by node parity") {
  const auto f = [](double x) { return std::exp(std::cos(2 * pi * x)); };
  const auto fp = [](double x) {
    return -2 * pi * std::sin(2 * pi * x) * std::exp(std::cos(2 * pi * x));
  };
  const std::vector<int> Ns = {16, 24, 32, 48, 64};

  SUBCASE("generic parameters give order 3") {
    const auto rep = operators::measure_truncation_order({0.5, 0.5}, f, fp, Ns);
    CHECK(rep.order_minus == doctest::Approx(3.0).epsilon(0.25 / 3.0));
    CHECK(rep.order_plus == doctest::Approx(3.0).epsilon(0.25 / 3.0));
  }

  SUBCASE("c1 + c2 = 0 upgrades to order 4") {
    const auto rep = operators::measure_truncation_order({0.5, -0.5}, f, fp, Ns);
    CHECK(rep.order_minus == doctest::Approx(4.0).epsilon(0.25 / 4.0));
    CHECK(rep.order_plus == doctest::Approx(4.0).epsilon(0.25 / 4.0));
  }

  SUBCASE("c1 = c2 = 0 classical fourth order") {
    const auto rep = operators::measure_truncation_order({0.0, 0.0}, f, fp, Ns);
    CHECK(rep.order_minus == doctest::Approx(4.0).epsilon(0.25 / 4.0));
    CHECK(rep.order_plus == doctest::Approx(4.0).epsilon(0.25 / 4.0));
  }
}

}  // TEST_SUITE
