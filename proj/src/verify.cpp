// Copyright 2026 The cmaxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "cmax/analytic.hpp"
#include "cmax/entanglement.hpp"
#include "cmax/lindblad.hpp"
#include "cmax/multimode.hpp"
#include "cmax/sideband.hpp"
#include "cmax/sweep.hpp"

namespace cmax::sweep {

namespace {

constexpr double kPi = std::numbers::pi;

Check below(std::string name, double budget, double measured, std::string note = {}) {
  return Check{std::move(name), budget, measured, measured < budget, std::move(note)};
}

Check at_least(std::string name, double budget, double measured, std::string note = {}) {
  return Check{std::move(name), budget, measured, measured >= budget, std::move(note)};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) { return make_axis(lo, hi, n, Spacing::linear); }

// Analytic vs pseudomode master equation on 401 points of [0, 6].
void lindblad_checks(const VerifyOptions& opt, VerifyReport& report) {
  const std::vector<double> taus = linspace(0.0, 6.0, 401);
  double worst_c = 0.0, worst_coh = 0.0, worst_trace = 0.0, min_eig = 1.0;
  using I = DensityMatrix3::Index;
  for (double xi : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    lindblad::LindbladConfig cfg;
    cfg.params = ModelParams::from_xi(xi);
    cfg.t_end = 6.0;
    cfg.coupling_sign = opt.inject_sign_flip ? -1.0 : 1.0;
    const auto samples = lindblad::integrate(cfg, taus);
    for (const auto& s : samples) {
      const RescaledTime t{s.tau};
      const PureAmplitudes psi = analytic::amplitudes(cfg.params, t);
      const complex coh = psi.c_e0 * std::conj(psi.c_g1);
      worst_c = std::max(worst_c, std::abs(analytic::concurrence(cfg.params, t) - 2.0 * std::abs(s.rho(I::e0, I::g1))));
      worst_coh = std::max(worst_coh, std::abs(coh - s.rho(I::e0, I::g1)));
      worst_trace = std::max(worst_trace, std::abs(s.rho.trace() - 1.0));
      min_eig = std::min(min_eig, s.rho.min_eigenvalue());
    }
  }
  const std::string note = opt.inject_sign_flip ? "mutation: exchange coupling sign flipped" : "";
  report.checks.push_back(below("lindblad_concurrence_equivalence", 1e-6, worst_c, note));
  report.checks.push_back(below("lindblad_coherence_equivalence", 1e-6, worst_coh, note));
  report.checks.push_back(below("lindblad_trace", 1e-9, worst_trace));
  report.checks.push_back(at_least("lindblad_min_eigenvalue", -1e-9, min_eig));
}

double multimode_error(std::size_t modes, double window, const std::vector<double>& taus, double* norm_drift,
                       std::string* horizon_note) {
  const ModelParams params = ModelParams::from_xi(2.0);
  const auto bath = multimode::sample_bath(params, modes, window);
  const auto states = multimode::evolve(bath, taus);
  double worst = 0.0;
  for (const auto& s : states) {
    const double exact = std::norm(analytic::amplitudes(params, RescaledTime{s.tau}).c_e0);
    worst = std::max(worst, std::abs(s.qubit_population() - exact));
    if (norm_drift) *norm_drift = std::max(*norm_drift, std::abs(s.norm_squared() - 1.0));
  }
  if (horizon_note) {
    std::ostringstream os;
    os << "multimode N=" << modes << " W=" << window << ": recurrence horizon tau=" << bath.recurrence_horizon()
       << ", checks use tau <= " << taus.back();
    *horizon_note = os.str();
  }
  return worst;
}

void multimode_checks(const VerifyOptions& opt, VerifyReport& report) {
  const std::vector<double> taus = linspace(0.0, 3.0, 301);
  const std::vector<std::size_t> ladder =
      opt.full ? std::vector<std::size_t>{501, 1001, 2001, 4001} : std::vector<std::size_t>{501, 1001, 2001};
  std::vector<double> errors;
  double drift = 0.0;
  std::string note;
  for (std::size_t n : ladder) errors.push_back(multimode_error(n, 60.0, taus, &drift, &note));
  report.notes.push_back(note);

  std::ostringstream ladder_note;
  ladder_note.precision(6);
  double worst_step = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < errors.size(); ++i) {
    ladder_note << (i ? ", " : "") << "N=" << ladder[i] << ":" << errors[i];
    if (i > 0) worst_step = std::max(worst_step, errors[i] - errors[i - 1]);
  }
  report.checks.push_back(below("multimode_continuum_equivalence", 5e-3, errors.back(), ladder_note.str()));
  report.checks.push_back(below("multimode_convergence_monotone", 0.0, worst_step, "max successive error change"));
  report.checks.push_back(below("multimode_norm", 1e-9, drift));
}

void optimum_checks(VerifyReport& report) {
  double worst_gap = 0.0, worst_slope = 0.0;
  for (double xi : {1.2, 2.0, 5.0, 10.0, 50.0}) {
    const ModelParams p = ModelParams::from_xi(xi);
    const double formula = analytic::t_opt_formula(p)->tau;
    const double numeric = analytic::t_opt_numeric(p).tau.tau;
    worst_gap = std::max(worst_gap, std::abs(formula - numeric));
    const double h = 1e-5 * formula;
    const double slope = (analytic::concurrence(p, RescaledTime{formula + h}) -
                          analytic::concurrence(p, RescaledTime{formula - h})) / (2.0 * h);
    worst_slope = std::max(worst_slope, std::abs(slope));
  }
  report.checks.push_back(below("t_opt_formula_vs_numeric", 1e-6, worst_gap));
  report.checks.push_back(below("t_opt_stationarity", 1e-6, worst_slope));

  const auto r1 = analytic::c_max(ModelParams::from_xi(1.0));
  const auto r2 = analytic::c_max(ModelParams::from_xi(2.0));
  report.checks.push_back(below("golden_cmax_xi1", 1e-4, std::abs(r1.c_max - 0.58694)));
  report.checks.push_back(below("golden_tau_opt_xi1", 1e-4, std::abs(r1.tau_opt.tau - 0.70711)));
  report.checks.push_back(below("golden_cmax_xi2", 1e-3, std::abs(r2.c_max - 0.75597)));
  report.checks.push_back(below("golden_tau_opt_xi2", 1e-4, std::abs(r2.tau_opt.tau - 0.38051)));

  const auto r50 = analytic::c_max(ModelParams::from_xi(50.0));
  const double undamped = kPi / (4.0 * 50.0);
  report.checks.push_back(below("strong_coupling_tau_opt", 0.02, std::abs(r50.tau_opt.tau - undamped) / undamped));
  report.checks.push_back(at_least("strong_coupling_cmax", 0.94, r50.c_max));
}

void cmax_checks(const VerifyOptions& opt, VerifyReport& report) {
  const std::vector<double> xis = make_axis(0.01, 100.0, 200, Spacing::log);
  const CmaxCurve curve = cmax_curve(xis, opt.threads);
  double min_deriv = std::numeric_limits<double>::infinity();
  for (const auto& p : curve.points) min_deriv = std::min(min_deriv, p.derivative);
  report.checks.push_back(below("cmax_monotonicity_violations", 0.5,
                                static_cast<double>(curve.monotonicity_violations.size())));
  report.checks.push_back(Check{"cmax_derivative_positive", 0.0, min_deriv, min_deriv > 0.0, "min dCmax/dxi"});
  report.checks.push_back(at_least("cmax_saturation_xi100", 0.97, curve.points.back().record.c_max));
  const double d50 = analytic::c_max_derivative(50.0);
  const double d05 = analytic::c_max_derivative(0.5);
  report.checks.push_back(below("cmax_derivative_ratio_50_vs_0p5", 1.0, d50 / d05));
}

void weak_coupling_checks(const VerifyOptions& opt, VerifyReport& report) {
  constexpr double xi = 0.05;
  const double rate = xi * xi;
  const double t_end = 2.0 / rate;
  const std::vector<double> taus = linspace(0.0, t_end, 201);

  lindblad::LindbladConfig cfg;
  cfg.params = ModelParams::from_xi(xi);
  cfg.t_end = t_end;
  std::vector<double> pop;
  for (const auto& s : lindblad::integrate(cfg, taus)) pop.push_back(s.rho.population(DensityMatrix3::e0));
  const double lrate = fit_decay_rate(taus, pop);
  report.checks.push_back(below("weak_coupling_rate_lindblad", 0.05, std::abs(lrate - rate) / rate));

  // Narrow window, fine grid: the golden-rule rate only sees J(0), and the
  // recurrence horizon must exceed 2/xi^2.
  const std::size_t modes = opt.full ? 4001 : 3201;
  const double window = opt.full ? 2.5 : 2.0;
  const auto bath = multimode::sample_bath(cfg.params, modes, window);
  pop.clear();
  for (const auto& s : multimode::evolve(bath, taus)) pop.push_back(s.qubit_population());
  const double mrate = fit_decay_rate(taus, pop);
  std::ostringstream note;
  note << "N=" << modes << " W=" << window << " horizon=" << bath.recurrence_horizon() << " > " << t_end;
  const bool inside = bath.recurrence_horizon() > t_end;
  Check c = below("weak_coupling_rate_multimode", 0.05, std::abs(mrate - rate) / rate, note.str());
  c.pass = c.pass && inside;
  report.checks.push_back(c);
}

void entanglement_checks(VerifyReport& report) {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double norm = unit(rng);
    const double split = unit(rng) * kPi / 2;
    const double pa = 2 * kPi * unit(rng);
    const double pb = 2 * kPi * unit(rng);
    PureAmplitudes psi{std::polar(std::sqrt(norm) * std::cos(split), pa),
                       std::polar(std::sqrt(norm) * std::sin(split), pb)};
    const DensityMatrix3 rho = pure_to_density(psi);
    worst = std::max(worst, std::abs(entanglement::wootters_concurrence(entanglement::embed(rho)) -
                                     entanglement::xstate_concurrence(rho)));
  }
  report.checks.push_back(below("wootters_vs_xstate", 1e-10, worst, "1000 random model states"));
}

// Ascending power series, kept separate from the library's recurrence.
double bessel_series(int n, double x) {
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= (x / 2.0) / k;
  double sum = term;
  for (int m = 1; m < 500; ++m) {
    term *= -(x * x / 4.0) / (static_cast<double>(m) * (m + n));
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

void sideband_checks(VerifyReport& report) {
  double worst_series = 0.0, worst_recurrence = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      worst_series = std::max(worst_series, std::abs(sideband::bessel_jn(n, x) - bessel_series(n, x)));
      if (n >= 1) {
        const double lhs = sideband::bessel_jn(n - 1, x) + sideband::bessel_jn(n + 1, x);
        worst_recurrence = std::max(worst_recurrence, std::abs(lhs - 2.0 * n / x * sideband::bessel_jn(n, x)));
      }
    }
  }
  report.checks.push_back(below("bessel_vs_series", 1e-12, worst_series));
  report.checks.push_back(below("bessel_recurrence", 1e-10, worst_recurrence));

  double worst_rt = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const double ceiling = 4.0 * 10.0 * sideband::first_maximum(n).value / 5.0;
    for (double fraction : {0.01, 0.1, 0.5, 0.9, 0.999}) {
      const double target = fraction * ceiling;
      const double eps = sideband::solve_amplitude(10.0, 7.0, n, 5.0, target);
      const sideband::SidebandConfig cfg{10.0, eps, 7.0, n, {}, {}};
      const double lambda = target * 5.0 / 4.0;
      worst_rt = std::max(worst_rt, std::abs(sideband::effective_coupling(cfg) - lambda) / lambda);
    }
  }
  report.checks.push_back(below("sideband_round_trip", 1e-9, worst_rt));
}

void determinism_checks(VerifyReport& report) {
  SweepGrid grid;
  grid.xi_values = make_axis(0.1, 10.0, 9, Spacing::log);
  grid.tau_values = linspace(0.0, 3.0, 31);
  grid.method = Method::lindblad;
  const auto a = heatmap(grid, 1);
  const auto b = heatmap(grid, 4);
  const auto c = heatmap_serial(grid);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto same = [](const SweepRow& x, const SweepRow& y) {
      return x.xi == y.xi && x.tau == y.tau && x.concurrence == y.concurrence && x.p_e0 == y.p_e0 &&
             x.p_g1 == y.p_g1 && x.p_g0 == y.p_g0 && x.survival == y.survival;
    };
    if (!same(a.rows[i], b.rows[i]) || !same(a.rows[i], c.rows[i])) ++mismatches;
  }
  report.checks.push_back(below("heatmap_determinism", 0.5, static_cast<double>(mismatches),
                                "1 vs 4 threads vs serial, bitwise"));
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerifyReport verify(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  lindblad_checks(options, report);
  multimode_checks(options, report);
  optimum_checks(report);
  cmax_checks(options, report);
  weak_coupling_checks(options, report);
  entanglement_checks(report);
  sideband_checks(report);
  determinism_checks(report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cmax::sweep
