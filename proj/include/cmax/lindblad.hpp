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

/// Pseudomode master equation: the qubit exchanges its excitation with one
/// resonant mode (coupling xi in rescaled time) which decays at rate 4 into
/// a flat continuum. Restricted to {|e,0>, |g,1>, |g,0>}, which is closed
/// under the generator when starting from |e,0>.
namespace cmax::lindblad {

struct LindbladConfig {
  ModelParams params = ModelParams::from_xi(1.0);
  double dt = 1e-3;    // initial step, rescaled time
  double tol = 1e-10;  // local error tolerance per step
  double t_end = 0.0;
  double coupling_sign = 1.0;  // -1 flips the exchange term (verify self-test)

  void check() const;
};

struct Sample {
  double tau;
  DensityMatrix3 rho;
};

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double min_step = 0.0;
};

/// d rho / d tau = -i[H, rho] + 4 (a rho a^dag - {a^dag a, rho}/2),
/// H = sign * xi (|e,0><g,1| + |g,1><e,0|).
DensityMatrix3 rhs(const DensityMatrix3& rho, const ModelParams& params, double coupling_sign = 1.0);

/// Integrates from |e,0><e,0| at tau = 0 and returns one sample per
/// requested time (non-decreasing, each in [0, t_end]).
///
/// Dormand-Prince 5(4) with PI step control. Steps are shortened to land
/// on each sample time, so no interpolation is involved. Every sample is checked for trace,
/// Hermiticity and positivity at 10*tol (floored at 1e-9); a violation
/// throws NumericError, as does a step below 1e-14.
std::vector<Sample> integrate(const LindbladConfig& config, std::span<const double> sample_times,
                              IntegrationStats* stats = nullptr);

/// Evenly spaced samples on [0, t_end], both ends included.
std::vector<Sample> integrate(const LindbladConfig& config, std::size_t n_samples,
                              IntegrationStats* stats = nullptr);

}  // namespace cmax::lindblad
