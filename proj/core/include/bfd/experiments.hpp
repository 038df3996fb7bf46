#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bfd/dg.hpp"
#include "bfd/fit.hpp"
#include "bfd/grid.hpp"
#include "bfd/operators.hpp"
#include "bfd/propagation.hpp"
#include "bfd/symbol.hpp"

namespace bfd::experiments {

using grid::Complex;

enum class SchemeKind { bfd, fd, dg_standard, dg_penalized };

struct SchemeSpec {
  SchemeKind kind = SchemeKind::bfd;
  operators::SchemeParams params;  // bfd / dg_penalized
  int fd_order = 4;                // fd
  std::string label() const;
};

enum class Propagator { rk, modal };

// Default initial data of the convergence studies, exp(cos(2 pi x / L)).
std::function<double(double)> default_initial_data(double L);

struct RunConfig {
  SchemeSpec scheme;
  int N = 48;
  double L = 1.0;
  double T = 1.0;
  double cfl = 0.2;
  bool post_process = false;
  Propagator propagator = Propagator::rk;
  std::function<double(double)> f0;  // defaulted to default_initial_data(L)
};

// Advances the scheme to T and returns the (optionally filtered) solution.
grid::GridFunction run_scheme(const RunConfig& cfg);

struct ConvergenceRow {
  int N = 0;
  double h = 0, l2 = 0, linf = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::vector<int> skipped;  // blow-ups excluded from the fit
  double slope_l2 = 0, resid_l2 = 0;
  double slope_linf = 0, resid_linf = 0;
  bool accepted_l2 = false, accepted_linf = false;  // resid95 < 0.15
};

struct ConvergenceConfig {
  SchemeSpec scheme;
  std::vector<int> Ns = {48, 60, 72, 96, 120, 144};
  double L = 1.0;
  double T = 1.0;
  double cfl = 0.2;
  bool post_process = false;
  Propagator propagator = Propagator::rk;
  std::function<double(double)> f0;
};

ConvergenceReport run_convergence(const ConvergenceConfig& cfg);

struct ErrorVsTimeConfig {
  int N = 128;
  double L = 1.0;
  double t_min = 1e-2;
  double t_max = 1e10;
  int per_decade = 12;
  double c = 0.5;  // the bfd curves use c1 = c2 = c
  std::function<double(double)> f0;
};

struct ErrorVsTimeReport {
  std::vector<double> t;
  std::vector<std::string> labels;          // fd2, fd4, fd6, bfd, bfd+filter
  std::vector<std::vector<double>> l2;      // [label][time]
};

// l2 errors under exact modal propagation for the standard fd schemes and
// the block scheme with and without the spectral filter.
ErrorVsTimeReport run_error_vs_time(const ErrorVsTimeConfig& cfg);

struct PhaseDemoConfig {
  int N = 32;
  double L = 1.0;
  double T = 4800.0;
  std::function<double(double)> f0;  // defaults to sin(4 pi x / L)
};

struct PhaseDemoReport {
  std::vector<double> x;
  std::vector<double> exact;
  std::vector<std::string> labels;  // bfd(0,0), filtered, bfd(1/2,1/2), filtered
  std::vector<std::vector<double>> profiles;
  std::vector<double> linf_error;
};

PhaseDemoReport run_phase_demo(const PhaseDemoConfig& cfg);

struct StabilityRow {
  double c1 = 0, c2 = 0;
  double max_re = 0, max_cos = 0;
  bool stable = false;
};

struct StabilityLatticeReport {
  std::vector<StabilityRow> rows;
  // every c1 >= c2 point stable and every c1 < c2 point with max_re > 0
  bool pattern_consistent = false;
};

StabilityLatticeReport run_stability_lattice(int lattice_n = 33,
                                             int theta_samples = 257);

struct DGCheckReport {
  dg::PenaltyCoefficients solved, closed_form;
  double coeff_max_err = 0;      // |solved - closed form|, absolute
  double block_max_err = 0;      // |penalized - bfd| at h = 1, absolute
  bool pass = false;             // both below 1e-12
};

DGCheckReport run_dg_check(double c1, double c2);

struct SymbolDumpRow {
  int omega = 0, nu = 0;
  Complex Qhat1, Qhat2;
  double abs_alpha1 = 0, abs_beta1 = 0, abs_alpha2 = 0, abs_beta2 = 0;
  double cos_theta = 0;
  Complex phase_velocity_error;  // Qhat1/(-i kappa) - 1, zero row at omega=0
};

std::vector<SymbolDumpRow> run_symbol_dump(const operators::SchemeParams& p,
                                           int N, double L);

}  // namespace bfd::experiments
