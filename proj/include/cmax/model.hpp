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

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cmax {

using complex = std::complex<double>;

inline constexpr const char* kVersion = "1.0.0";

/// Precondition violated by a caller-supplied value.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value type invariant (norm, trace, positivity) does not hold.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical procedure failed (step underflow, eigensolver, drift).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Units of a physical rate. Conversions are always explicit; a bare
/// "MHz" is ambiguous about the 2*pi convention and is not offered.
enum class RateUnit {
  rad_per_s,
  rad_per_us,
  cyclic_mhz,  // f in MHz, omega = 2*pi*f*1e6 rad/s
};

struct Rate {
  double value = 0.0;
  RateUnit unit = RateUnit::rad_per_s;

  double rad_per_s() const;
};

std::string to_string(RateUnit unit);

/// Dimensionless coupling ratio xi = 4*lambda0/kappa plus the optional
/// physical rates it was built from.
class ModelParams {
 public:
  /// Throws DomainError unless xi is finite and strictly positive.
  static ModelParams from_xi(double xi);

  double xi() const { return xi_; }
  const std::optional<Rate>& kappa() const { return kappa_; }
  const std::optional<Rate>& lambda0() const { return lambda0_; }

  /// Generator constants in rescaled time tau = kappa*t/4.
  double lambda_rescaled() const { return xi_; }
  static constexpr double kappa_rescaled() { return 4.0; }

 private:
  friend ModelParams params_from_physical(Rate kappa, Rate lambda0);
  explicit ModelParams(double xi) : xi_(xi) {}

  double xi_;
  std::optional<Rate> kappa_;
  std::optional<Rate> lambda0_;
};

struct RescaledTime {
  double tau = 0.0;

  static RescaledTime of(double tau);
};

/// Amplitudes of the no-jump wavefunction on |e,0> and |g,1>.
struct PureAmplitudes {
  complex c_e0{1.0, 0.0};
  complex c_g1{0.0, 0.0};

  double norm_squared() const { return std::norm(c_e0) + std::norm(c_g1); }
};

/// Unconditional state on the ordered basis (|e,0>, |g,1>, |g,0>).
struct DensityMatrix3 {
  Eigen::Matrix3cd entries = Eigen::Matrix3cd::Zero();

  enum Index : int { e0 = 0, g1 = 1, g0 = 2 };

  complex operator()(int r, int c) const { return entries(r, c); }
  double population(int i) const { return entries(i, i).real(); }
  complex trace() const { return entries.trace(); }
  double min_eigenvalue() const;

  static DensityMatrix3 ground();
  static DensityMatrix3 initial();  // |e,0><e,0|
};

/// Throws InvariantError when rho is not Hermitian/unit-trace/PSD within tol.
void validate(const DensityMatrix3& rho, double tol = 1e-9);

ModelParams params_from_physical(Rate kappa, Rate lambda0);

/// t in seconds; kappa converted to rad/s.
RescaledTime tau_from_time(double t_seconds, Rate kappa);

/// Traces out the Markovian reservoir: the jump branch lands on |g,0> with
/// weight 1 - <psi|psi> and carries no coherence with the other levels.
DensityMatrix3 pure_to_density(const PureAmplitudes& psi);

}  // namespace cmax
