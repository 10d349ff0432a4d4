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
#include <stdexcept>

#include "cmax/model.hpp"

/// Parametric sideband coupling: modulating the qubit at nu = (w_r - w_q)/n
/// couples it to the resonator with strength lambda = g J_n(epsilon/nu).
namespace cmax::sideband {

/// Target coupling exceeds what the sideband can deliver.
class RangeError : public std::range_error {
 public:
  RangeError(const std::string& what, double max_xi) : std::range_error(what), max_xi_(max_xi) {}
  double max_achievable_xi() const { return max_xi_; }

 private:
  double max_xi_;
};

struct SidebandConfig {
  double g = 0.0;        // on-resonance coupling
  double epsilon = 0.0;  // modulation amplitude, same units as nu
  double nu = 0.0;       // modulation frequency
  int n = 1;             // sideband order; 0 is the carrier
  std::optional<double> omega_q;
  std::optional<double> omega_r;

  void check() const;
};

inline constexpr int kMaxOrder = 64;
inline constexpr double kMaxArgument = 700.0;

/// J_n(mu) by Miller's downward recurrence normalised with
/// J_0 + 2 sum_k J_2k = 1. Requires 0 <= n <= 64 and |mu| < 700.
double bessel_jn(int n, double mu);

/// g J_n(epsilon/nu). Sign is kept; xi uses |lambda|.
double effective_coupling(const SidebandConfig& cfg);

/// Location and value of the first maximum of J_n on mu >= 0 (n >= 1).
struct FirstMaximum {
  double mu;
  double value;
};
FirstMaximum first_maximum(int n);

/// Smallest epsilon >= 0 with g J_n(epsilon/nu) = target_xi * kappa / 4,
/// searched on the rising branch [0, first maximum]. Throws RangeError
/// carrying the largest reachable xi when the target is out of reach.
double solve_amplitude(double g, double nu, int n, double kappa, double target_xi);

/// Sideband order used in the experiment: first order below xi = 1,
/// second order at and above it.
int regime_preset(double xi);

}  // namespace cmax::sideband
