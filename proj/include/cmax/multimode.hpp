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
#include <vector>

#include "cmax/model.hpp"

/// Brute-force continuum oracle. The Lorentzian reservoir is replaced by N
/// discrete modes on a uniform detuning grid, and the single-excitation
/// Schroedinger equation
///
///   i dc_e/dtau = sum_k g_k c_k
///   i dc_k/dtau = delta_k c_k + g_k c_e
///
/// is integrated with classical RK4. All quantities are in rescaled units
/// (frequencies in units of kappa/4), where the Lorentzian has half width 2.
namespace cmax::multimode {

struct DiscretizedBath {
  std::vector<double> detunings;
  std::vector<double> couplings;
  double window = 0.0;  // half width W in units of kappa
  std::size_t n_modes = 0;
  double xi = 0.0;

  /// Mode spacing in rescaled units; 0 for a single mode.
  double spacing() const;
  /// 2*pi/spacing: beyond this time the discrete bath revives. Infinite
  /// for a single mode.
  double recurrence_horizon() const;
  /// sum_k g_k^2.
  double coupling_mass() const;
  /// sum_k g_k^2 exp(-i delta_k tau), approximating xi^2 exp(-2|tau|).
  complex correlation(double tau) const;
};

struct MultimodeState {
  double tau = 0.0;
  complex c_e{1.0, 0.0};
  std::vector<complex> c_k;

  double norm_squared() const;
  double qubit_population() const { return std::norm(c_e); }
};

/// Lorentzian J(delta) = (1/pi) * 2 / (delta^2 + 4) in rescaled units.
double lorentzian(double delta);

/// Uniform grid of n_modes detunings over [-4W, 4W] (i.e. +-W*kappa) with
/// trapezoid weights w_k; g_k = xi * sqrt(J(delta_k) w_k). Requires
/// n_modes >= 2 and window > 0.
DiscretizedBath sample_bath(const ModelParams& params, std::size_t n_modes, double window);

/// Zero-linewidth limit: one resonant mode carrying the full coupling xi.
DiscretizedBath single_mode_bath(const ModelParams& params);

/// Largest step the default integrator takes: 0.05 / max(|delta_k|, xi).
double max_step(const DiscretizedBath& bath);

enum class Execution { serial, parallel };

/// Time derivative of (c_e, c_k). The parallel kernel reduces sum g_k c_k
/// over fixed blocks, so the result does not depend on the thread count.
void derivative(const DiscretizedBath& bath, complex c_e, std::span<const complex> c_k, complex& dc_e,
                std::span<complex> dc_k, Execution exec);

/// States at each requested time (non-decreasing, >= 0). dt <= 0 selects
/// max_step(bath). Throws NumericError once the norm drifts by more than 1e-6.
std::vector<MultimodeState> evolve(const DiscretizedBath& bath, std::span<const double> sample_times,
                                   double dt = 0.0, Execution exec = Execution::parallel);

/// Evenly spaced samples on [0, t_end].
std::vector<MultimodeState> evolve(const DiscretizedBath& bath, double t_end, std::size_t n_samples,
                                   double dt = 0.0, Execution exec = Execution::parallel);

/// Qubit-reservoir concurrence of the global pure state, 2|c_e| sqrt(1 - |c_e|^2).
double reservoir_concurrence(const MultimodeState& state);

/// Amplitude of the collective mode the qubit couples to, (1/xi) sum g_k c_k.
/// In the continuum limit this is the lossy-mode amplitude c_g1.
complex collective_amplitude(const DiscretizedBath& bath, const MultimodeState& state);

/// 2|c_e||collective amplitude|: the extractable concurrence reconstructed
/// from the multimode trajectory.
double extractable_concurrence(const DiscretizedBath& bath, const MultimodeState& state);

}  // namespace cmax::multimode
