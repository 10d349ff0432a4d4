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

#include "cmax/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cmax {

double Rate::rad_per_s() const {
  switch (unit) {
    case RateUnit::rad_per_s:
      return value;
    case RateUnit::rad_per_us:
      return value * 1e6;
    case RateUnit::cyclic_mhz:
      return 2.0 * std::numbers::pi * value * 1e6;
  }
  throw DomainError("unknown rate unit");
}

std::string to_string(RateUnit unit) {
  switch (unit) {
    case RateUnit::rad_per_s:
      return "rad/s";
    case RateUnit::rad_per_us:
      return "rad/us";
    case RateUnit::cyclic_mhz:
      return "MHz(cyclic)";
  }
  return "?";
}

ModelParams ModelParams::from_xi(double xi) {
  if (!std::isfinite(xi) || xi <= 0.0) {
    std::ostringstream msg;
    msg << "xi must be finite and > 0, got " << xi;
    throw DomainError(msg.str());
  }
  return ModelParams(xi);
}

RescaledTime RescaledTime::of(double tau) {
  if (!std::isfinite(tau) || tau < 0.0) {
    std::ostringstream msg;
    msg << "rescaled time must be finite and >= 0, got " << tau;
    throw DomainError(msg.str());
  }
  return RescaledTime{tau};
}

double DensityMatrix3::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(entries, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalue solver failed on 3x3 density matrix");
  }
  return solver.eigenvalues().minCoeff();
}

DensityMatrix3 DensityMatrix3::ground() {
  DensityMatrix3 rho;
  rho.entries(g0, g0) = 1.0;
  return rho;
}

DensityMatrix3 DensityMatrix3::initial() {
  DensityMatrix3 rho;
  rho.entries(e0, e0) = 1.0;
  return rho;
}

void validate(const DensityMatrix3& rho, double tol) {
  const Eigen::Matrix3cd& m = rho.entries;
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    std::ostringstream msg;
    msg << "density matrix not Hermitian (max |rho - rho^dag| = " << herm << ")";
    throw InvariantError(msg.str());
  }
  const complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " differs from 1";
    throw InvariantError(msg.str());
  }
  const double lmin = rho.min_eigenvalue();
  if (lmin < -tol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << lmin;
    throw InvariantError(msg.str());
  }
}

ModelParams params_from_physical(Rate kappa, Rate lambda0) {
  const double k = kappa.rad_per_s();
  const double l = lambda0.rad_per_s();
  if (!(k > 0.0) || !(l > 0.0) || !std::isfinite(k) || !std::isfinite(l)) {
    throw DomainError("kappa and lambda0 must be finite and > 0");
  }
  ModelParams p(4.0 * l / k);
  p.kappa_ = kappa;
  p.lambda0_ = lambda0;
  return p;
}

RescaledTime tau_from_time(double t_seconds, Rate kappa) {
  const double k = kappa.rad_per_s();
  if (!(k > 0.0)) throw DomainError("kappa must be > 0");
  if (!(t_seconds >= 0.0)) throw DomainError("time must be >= 0");
  return RescaledTime::of(k * t_seconds / 4.0);
}

DensityMatrix3 pure_to_density(const PureAmplitudes& psi) {
  const double n = psi.norm_squared();
  if (!(n <= 1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "no-jump norm " << n << " exceeds 1";
    throw InvariantError(msg.str());
  }
  DensityMatrix3 rho;
  using I = DensityMatrix3::Index;
  rho.entries(I::e0, I::e0) = std::norm(psi.c_e0);
  rho.entries(I::g1, I::g1) = std::norm(psi.c_g1);
  rho.entries(I::e0, I::g1) = psi.c_e0 * std::conj(psi.c_g1);
  rho.entries(I::g1, I::e0) = psi.c_g1 * std::conj(psi.c_e0);
  rho.entries(I::g0, I::g0) = std::max(0.0, 1.0 - n);
  return rho;
}

}  // namespace cmax
