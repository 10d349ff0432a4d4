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

#include <optional>
#include <string>

#include "cmax/model.hpp"

/// Closed-form no-jump dynamics of a qubit resonantly coupled to a lossy
/// mode, in rescaled time tau = kappa*t/4 where the coupling is xi and the
/// mode decay rate is 4:
///
///   c_e0(tau) = e^-tau [cos(W tau) + sin(W tau)/W]
///   c_g1(tau) = -i e^-tau (xi/W) sin(W tau),     W = sqrt(xi^2 - 1)
///
/// with cosh/sinh for xi < 1 and the polynomial limit at xi = 1.
namespace cmax::analytic {

enum class Regime { underdamped, overdamped, critical };

struct RegimeBranch {
  Regime kind;
  double omega;  // rescaled frequency sqrt(|xi^2 - 1|); 0 for critical
};

inline constexpr double kCriticalWindow = 1e-6;

RegimeBranch classify(const ModelParams& params);
std::string to_string(Regime regime);

PureAmplitudes amplitudes(const ModelParams& params, RescaledTime tau);

/// <psi|psi>, the probability that no photon has leaked into the continuum.
double survival_probability(const ModelParams& params, RescaledTime tau);

/// Extractable concurrence <psi|psi> sin(2 theta). The underdamped branch
/// evaluates the arctan form directly; the others use 2|c_e0||c_g1|.
double concurrence(const ModelParams& params, RescaledTime tau);

/// Optimal time from the closed-form stationarity condition. Only defined
/// on the underdamped branch; returns nullopt otherwise.
std::optional<RescaledTime> t_opt_formula(const ModelParams& params);

struct NumericOptimum {
  RescaledTime tau;
  double value = 0.0;
  bool zero_maximum = false;  // objective below 1e-14 everywhere
};

/// Search window [0, tau_max] used by t_opt_numeric.
double search_window(double xi);

NumericOptimum t_opt_numeric(const ModelParams& params);

enum class OptimumSource { formula, numeric };
std::string to_string(OptimumSource source);

struct OptimumRecord {
  double xi = 0.0;
  RescaledTime tau_opt;
  double c_max = 0.0;
  OptimumSource source = OptimumSource::numeric;
  bool zero_maximum = false;
};

OptimumRecord c_max(const ModelParams& params);

double default_derivative_step(double xi);

/// Central difference of C_max with respect to xi. Throws DomainError
/// unless xi > h > 0.
double c_max_derivative(double xi, double h);
inline double c_max_derivative(double xi) {
  return c_max_derivative(xi, default_derivative_step(xi));
}

}  // namespace cmax::analytic
