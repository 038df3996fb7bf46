// Microbenchmarks for the hot paths: operator application, the RK6 time
// loop, the modal transform pair, the spectral filter and the per-mode
// symbol decomposition.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "bfd/grid.hpp"
#include "bfd/operators.hpp"
#include "bfd/postproc.hpp"
#include "bfd/propagation.hpp"
#include "bfd/symbol.hpp"

namespace {

using namespace bfd;

grid::GridFunction smooth_data(int N) {
  const auto g = grid::build_grid(N, 1.0);
  return grid::sample(g, [](double x) {
    return std::exp(std::cos(2.0 * std::numbers::pi * x));
  });
}

void BM_block_apply(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto u = smooth_data(N);
  const auto op = operators::assemble_bfd(u.grid, {0.5, 0.5});
  for (auto _ : state) {
    const Eigen::VectorXcd out = operators::apply(op, u.values);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * u.values.size());
}
BENCHMARK(BM_block_apply)->Arg(48)->Arg(144)->Arg(1024);

void BM_stencil_apply(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto u = smooth_data(N);
  const auto op = operators::assemble_standard_fd(u.grid, 6);
  for (auto _ : state) {
    const Eigen::VectorXcd out = operators::apply(op, u.values);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * u.values.size());
}
BENCHMARK(BM_stencil_apply)->Arg(48)->Arg(144)->Arg(1024);

void BM_rk_integrate(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto u = smooth_data(N);
  const auto op = operators::assemble_bfd(u.grid, {0.5, 0.5});
  for (auto _ : state) {
    const auto uT = propagation::rk_integrate(op, u, 0.1, 0.2);
    benchmark::DoNotOptimize(uT.values.data());
  }
}
BENCHMARK(BM_rk_integrate)->Arg(48)->Arg(144);

void BM_modal_decompose(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto u = smooth_data(N);
  for (auto _ : state) {
    const auto dec = propagation::modal_decompose(u, {0.5, 0.5});
    benchmark::DoNotOptimize(dec.pairs.data());
  }
}
BENCHMARK(BM_modal_decompose)->Arg(48)->Arg(144)->Arg(1024);

void BM_modal_propagate(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto dec = propagation::modal_decompose(smooth_data(N), {0.5, 0.5});
  for (auto _ : state) {
    const auto uT = propagation::modal_propagate(dec, 1000.0);
    benchmark::DoNotOptimize(uT.values.data());
  }
}
BENCHMARK(BM_modal_propagate)->Arg(48)->Arg(144)->Arg(1024);

void BM_spectral_filter(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto u = smooth_data(N);
  for (auto _ : state) {
    const auto v = postproc::spectral_filter(u);
    benchmark::DoNotOptimize(v.values.data());
  }
}
BENCHMARK(BM_spectral_filter)->Arg(48)->Arg(144)->Arg(1024);

void BM_dft_coefficients(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto u = smooth_data(N);
  for (auto _ : state) {
    const Eigen::VectorXcd c = postproc::dft_coefficients(u);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_dft_coefficients)->Arg(48)->Arg(144)->Arg(1024);

void BM_decompose_mode(benchmark::State& state) {
  const operators::SchemeParams p{0.5, 0.5};
  int omega = 1;
  for (auto _ : state) {
    const auto d = symbol::decompose_mode(p, omega, 64, 1.0 / 64);
    benchmark::DoNotOptimize(&d);
    omega = omega % 31 + 1;
  }
}
BENCHMARK(BM_decompose_mode);

void BM_stability_scan(benchmark::State& state) {
  const operators::SchemeParams p{0.5, 0.5};
  for (auto _ : state) {
    const auto rep = symbol::stability_scan(p, 257);
    benchmark::DoNotOptimize(&rep);
  }
}
BENCHMARK(BM_stability_scan);

}  // namespace

BENCHMARK_MAIN();
