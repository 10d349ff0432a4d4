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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cmax/analytic.hpp"
#include "cmax/model.hpp"

namespace cmax::sweep {

enum class Method { analytic, lindblad, multimode };
enum class Spacing { linear, log };

std::string to_string(Method method);
std::string to_string(Spacing spacing);
Method parse_method(const std::string& name);
Spacing parse_spacing(const std::string& name);

struct MethodOptions {
  double lindblad_tol = 1e-10;
  double lindblad_dt = 1e-3;
  std::size_t modes = 2001;
  double window = 40.0;
};

/// n points from lo to hi inclusive. Log spacing needs lo > 0.
std::vector<double> make_axis(double lo, double hi, std::size_t n, Spacing spacing);

struct SweepGrid {
  std::vector<double> xi_values;
  std::vector<double> tau_values;
  Spacing xi_spacing = Spacing::log;
  Method method = Method::analytic;
  MethodOptions options;

  /// Strictly increasing axes, xi > 0, tau >= 0.
  void check() const;
};

struct SweepRow {
  double xi;
  double tau;
  double concurrence;
  double p_e0;
  double p_g1;
  double p_g0;
  double survival;
};

struct SweepMetadata {
  Method method = Method::analytic;
  Spacing xi_spacing = Spacing::log;
  std::size_t xi_count = 0;
  std::size_t tau_count = 0;
  MethodOptions options;
  int threads = 1;
  double wall_seconds = 0.0;
  std::string version;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // xi-major, then tau
  SweepMetadata metadata;
};

/// One xi row over the tau axis with the chosen method. The multimode
/// oracle always runs its serial kernel here so rows are bitwise
/// reproducible whatever the sweep parallelism.
std::vector<SweepRow> evaluate_row(double xi, std::span<const double> tau_values, Method method,
                                   const MethodOptions& options);

/// Parallel over grid points (analytic) or xi rows (oracles). threads <= 0
/// uses the OpenMP default. Errors carry the failing grid point.
SweepResult heatmap(const SweepGrid& grid, int threads = 0);

/// Serial reference for heatmap; identical output bytes.
SweepResult heatmap_serial(const SweepGrid& grid);

struct CmaxPoint {
  analytic::OptimumRecord record;
  double derivative = 0.0;
};

struct CmaxCurve {
  std::vector<CmaxPoint> points;
  /// Indices i where c_max[i] < c_max[i-1]. Reported, never corrected.
  std::vector<std::size_t> monotonicity_violations;

  bool monotone() const { return monotonicity_violations.empty(); }
};

CmaxCurve cmax_curve(std::span<const double> xi_values, int threads = 0);
CmaxCurve cmax_curve_serial(std::span<const double> xi_values);

// ---------------------------------------------------------------------------
// Cross-oracle verification harness.

struct Check {
  std::string name;
  double budget = 0.0;
  double measured = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  bool full = false;
  bool inject_sign_flip = false;  // mutation self-test of the Lindblad checks
  int threads = 0;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  bool all_pass() const;
};

VerifyReport verify(const VerifyOptions& options = {});

/// Least-squares decay rate -d ln p / d tau.
double fit_decay_rate(std::span<const double> tau, std::span<const double> population);

}  // namespace cmax::sweep
