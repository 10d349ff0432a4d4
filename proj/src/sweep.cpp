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

#include "cmax/sweep.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmax/lindblad.hpp"
#include "cmax/multimode.hpp"

namespace cmax::sweep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int resolved_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

std::string point_label(double xi, double tau) {
  std::ostringstream os;
  os.precision(17);
  os << "at grid point (xi=" << xi << ", tau=" << tau << "): ";
  return os.str();
}

// Rethrows with the grid point prepended, preserving the error category.
[[noreturn]] void rethrow_annotated(std::exception_ptr error, double xi, double tau) {
  const std::string where = point_label(xi, tau);
  try {
    std::rethrow_exception(error);
  } catch (const DomainError& e) {
    throw DomainError(where + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(where + e.what());
  } catch (const NumericError& e) {
    throw NumericError(where + e.what());
  } catch (const std::exception& e) {
    throw NumericError(where + e.what());
  }
}

SweepRow analytic_point(double xi, double tau) {
  const ModelParams params = ModelParams::from_xi(xi);
  const RescaledTime t = RescaledTime::of(tau);
  const PureAmplitudes psi = analytic::amplitudes(params, t);
  const double pe = std::norm(psi.c_e0);
  const double pg = std::norm(psi.c_g1);
  const double survival = pe + pg;
  return SweepRow{xi, tau, analytic::concurrence(params, t), pe, pg, 1.0 - survival, survival};
}

SweepMetadata make_metadata(const SweepGrid& grid, int threads) {
  SweepMetadata meta;
  meta.method = grid.method;
  meta.xi_spacing = grid.xi_spacing;
  meta.xi_count = grid.xi_values.size();
  meta.tau_count = grid.tau_values.size();
  meta.options = grid.options;
  meta.threads = threads;
  meta.version = kVersion;
  return meta;
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::analytic:
      return "analytic";
    case Method::lindblad:
      return "lindblad";
    case Method::multimode:
      return "multimode";
  }
  return "?";
}

std::string to_string(Spacing spacing) { return spacing == Spacing::log ? "log" : "linear"; }

Method parse_method(const std::string& name) {
  if (name == "analytic") return Method::analytic;
  if (name == "lindblad") return Method::lindblad;
  if (name == "multimode") return Method::multimode;
  throw DomainError("unknown method '" + name + "'");
}

Spacing parse_spacing(const std::string& name) {
  if (name == "log") return Spacing::log;
  if (name == "linear") return Spacing::linear;
  throw DomainError("unknown spacing '" + name + "'");
}

std::vector<double> make_axis(double lo, double hi, std::size_t n, Spacing spacing) {
  if (n == 0) throw DomainError("axis needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) throw DomainError("axis range must satisfy lo <= hi");
  if (spacing == Spacing::log && !(lo > 0.0)) throw DomainError("log axis needs lo > 0");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / denom;
    out[i] = spacing == Spacing::log ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)))
                                     : lo + f * (hi - lo);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

void SweepGrid::check() const {
  if (xi_values.empty() || tau_values.empty()) throw DomainError("sweep grid axes must be non-empty");
  for (std::size_t i = 0; i < xi_values.size(); ++i) {
    if (!(xi_values[i] > 0.0) || !std::isfinite(xi_values[i])) throw DomainError("xi values must be > 0");
    if (i > 0 && !(xi_values[i] > xi_values[i - 1])) throw DomainError("xi values must be strictly increasing");
  }
  for (std::size_t i = 0; i < tau_values.size(); ++i) {
    if (!(tau_values[i] >= 0.0) || !std::isfinite(tau_values[i])) throw DomainError("tau values must be >= 0");
    if (i > 0 && !(tau_values[i] > tau_values[i - 1])) throw DomainError("tau values must be strictly increasing");
  }
}

std::vector<SweepRow> evaluate_row(double xi, std::span<const double> tau_values, Method method,
                                   const MethodOptions& options) {
  std::vector<SweepRow> rows;
  rows.reserve(tau_values.size());
  switch (method) {
    case Method::analytic:
      for (double tau : tau_values) rows.push_back(analytic_point(xi, tau));
      break;
    case Method::lindblad: {
      lindblad::LindbladConfig cfg;
      cfg.params = ModelParams::from_xi(xi);
      cfg.dt = options.lindblad_dt;
      cfg.tol = options.lindblad_tol;
      cfg.t_end = tau_values.empty() ? 0.0 : tau_values.back();
      using I = DensityMatrix3::Index;
      for (const auto& s : lindblad::integrate(cfg, tau_values)) {
        const double pe = s.rho.population(I::e0);
        const double pg = s.rho.population(I::g1);
        const double pz = s.rho.population(I::g0);
        rows.push_back(SweepRow{xi, s.tau, 2.0 * std::abs(s.rho(I::e0, I::g1)), pe, pg, pz, pe + pg});
      }
      break;
    }
    case Method::multimode: {
      const auto bath = multimode::sample_bath(ModelParams::from_xi(xi), options.modes, options.window);
      for (const auto& s : multimode::evolve(bath, tau_values, 0.0, multimode::Execution::serial)) {
        const double pe = s.qubit_population();
        const double pg = std::norm(multimode::collective_amplitude(bath, s));
        rows.push_back(SweepRow{xi, s.tau, multimode::extractable_concurrence(bath, s), pe, pg, 1.0 - pe - pg,
                                pe + pg});
      }
      break;
    }
  }
  return rows;
}

SweepResult heatmap_serial(const SweepGrid& grid) {
  grid.check();
  const auto start = Clock::now();
  SweepResult result;
  result.metadata = make_metadata(grid, 1);
  result.rows.reserve(grid.xi_values.size() * grid.tau_values.size());
  for (double xi : grid.xi_values) {
    try {
      auto row = evaluate_row(xi, grid.tau_values, grid.method, grid.options);
      result.rows.insert(result.rows.end(), row.begin(), row.end());
    } catch (...) {
      rethrow_annotated(std::current_exception(), xi, grid.tau_values.front());
    }
  }
  result.metadata.wall_seconds = seconds_since(start);
  return result;
}

SweepResult heatmap(const SweepGrid& grid, int threads) {
  grid.check();
  const auto start = Clock::now();
  const int nthreads = resolved_threads(threads);
  const std::size_t n_xi = grid.xi_values.size();
  const std::size_t n_tau = grid.tau_values.size();

  SweepResult result;
  result.metadata = make_metadata(grid, nthreads);
  result.rows.resize(n_xi * n_tau);

  if (grid.method == Method::analytic) {
    const auto total = static_cast<std::ptrdiff_t>(n_xi * n_tau);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
      const auto u = static_cast<std::size_t>(idx);
      try {
        result.rows[u] = analytic_point(grid.xi_values[u / n_tau], grid.tau_values[u % n_tau]);
      } catch (...) {
        errors[u] = std::current_exception();
      }
    }
    for (std::size_t u = 0; u < errors.size(); ++u) {
      if (errors[u]) rethrow_annotated(errors[u], grid.xi_values[u / n_tau], grid.tau_values[u % n_tau]);
    }
  } else {
    const auto rows = static_cast<std::ptrdiff_t>(n_xi);
    std::vector<std::exception_ptr> errors(n_xi);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
      const auto i = static_cast<std::size_t>(r);
      try {
        const auto row = evaluate_row(grid.xi_values[i], grid.tau_values, grid.method, grid.options);
        std::copy(row.begin(), row.end(), result.rows.begin() + static_cast<std::ptrdiff_t>(i * n_tau));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < n_xi; ++i) {
      if (errors[i]) rethrow_annotated(errors[i], grid.xi_values[i], grid.tau_values.front());
    }
  }
  result.metadata.wall_seconds = seconds_since(start);
  return result;
}

namespace {

CmaxPoint cmax_point(double xi) {
  CmaxPoint p;
  p.record = analytic::c_max(ModelParams::from_xi(xi));
  p.derivative = analytic::c_max_derivative(xi);
  return p;
}

void flag_violations(CmaxCurve& curve) {
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    if (curve.points[i].record.c_max < curve.points[i - 1].record.c_max) {
      curve.monotonicity_violations.push_back(i);
    }
  }
}

void check_xi_list(std::span<const double> xi_values) {
  for (std::size_t i = 0; i < xi_values.size(); ++i) {
    if (!(xi_values[i] > 0.0)) throw DomainError("xi values must be > 0");
    if (i > 0 && !(xi_values[i] > xi_values[i - 1])) throw DomainError("xi values must be strictly increasing");
  }
}

}  // namespace

CmaxCurve cmax_curve_serial(std::span<const double> xi_values) {
  check_xi_list(xi_values);
  CmaxCurve curve;
  curve.points.reserve(xi_values.size());
  for (double xi : xi_values) curve.points.push_back(cmax_point(xi));
  flag_violations(curve);
  return curve;
}

CmaxCurve cmax_curve(std::span<const double> xi_values, int threads) {
  check_xi_list(xi_values);
  const int nthreads = resolved_threads(threads);
  CmaxCurve curve;
  curve.points.resize(xi_values.size());
  std::vector<std::exception_ptr> errors(xi_values.size());
  const auto n = static_cast<std::ptrdiff_t>(xi_values.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      curve.points[u] = cmax_point(xi_values[u]);
    } catch (...) {
      errors[u] = std::current_exception();
    }
  }
  for (std::size_t u = 0; u < errors.size(); ++u) {
    if (errors[u]) rethrow_annotated(errors[u], xi_values[u], 0.0);
  }
  flag_violations(curve);
  return curve;
}

double fit_decay_rate(std::span<const double> tau, std::span<const double> population) {
  if (tau.size() != population.size() || tau.size() < 2) throw DomainError("decay fit needs >= 2 paired samples");
  double st = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (!(population[i] > 0.0)) throw DomainError("decay fit needs positive populations");
    st += tau[i];
    sy += std::log(population[i]);
  }
  const double n = static_cast<double>(tau.size());
  const double mt = st / n;
  const double my = sy / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const double dt = tau[i] - mt;
    sxy += dt * (std::log(population[i]) - my);
    sxx += dt * dt;
  }
  return -sxy / sxx;
}

}  // namespace cmax::sweep
