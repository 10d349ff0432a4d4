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

#include "cmax/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace cmax::entanglement {

namespace {

constexpr double kClip = 1e-9;

// sy (x) sy in the product basis:
// | .. .. .. -1 |
// | .. ..  1 .. |
// | ..  1 .. .. |
// | -1 .. .. .. |
Eigen::Matrix4cd spin_flip() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 3) = -1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 0) = -1.0;
  return m;
}

[[noreturn]] void eigen_failure(const char* what, const Eigen::Matrix4cd& m) {
  std::ostringstream msg;
  msg << what << " eigensolver failed on\n" << m;
  throw NumericError(msg.str());
}

double clipped(double v) {
  if (v < 0.0 && v >= -kClip) return 0.0;
  return v;
}

}  // namespace

TwoQubitDensity embed(const DensityMatrix3& rho3) {
  TwoQubitDensity out;
  out.entries.bottomRightCorner<3, 3>() = rho3.entries;
  return out;
}

double wootters_concurrence(const TwoQubitDensity& rho) {
  const Eigen::Matrix4cd& m = rho.entries;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> rho_eig(m);
  if (rho_eig.info() != Eigen::Success) eigen_failure("density", m);

  // Eigenvalues at roundoff level are the null space of a rank-deficient
  // state; their square roots would otherwise leak ~1e-8 into sqrt(rho).
  const Eigen::Vector4d& lambda = rho_eig.eigenvalues();
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  Eigen::Vector4d sqrt_vals;
  for (int i = 0; i < 4; ++i) {
    const double l = clipped(lambda(i));
    if (l < 0.0) {
      std::ostringstream msg;
      msg << "density matrix has eigenvalue " << l << " below -" << kClip;
      throw InvariantError(msg.str());
    }
    sqrt_vals(i) = l <= floor ? 0.0 : std::sqrt(l);
  }
  const Eigen::Matrix4cd& v = rho_eig.eigenvectors();
  const Eigen::Matrix4cd sqrt_rho = v * sqrt_vals.asDiagonal() * v.adjoint();

  // The s_i are the eigenvalues of sqrt(R), i.e. the singular values of
  // sqrt(rho) * sqrt(rho~) with sqrt(rho~) = flip * conj(sqrt(rho)) * flip.
  const Eigen::Matrix4cd flip = spin_flip();
  const Eigen::Matrix4cd product = sqrt_rho * (flip * sqrt_rho.conjugate() * flip);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(product);
  if (svd.info() != Eigen::Success) eigen_failure("R-matrix", product);

  const Eigen::Vector4d s = svd.singularValues();  // descending
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double xstate_concurrence(const DensityMatrix3& rho3) {
  using I = DensityMatrix3::Index;
  const double stray = std::max({std::abs(rho3(I::e0, I::g0)), std::abs(rho3(I::g0, I::e0)),
                                 std::abs(rho3(I::g1, I::g0)), std::abs(rho3(I::g0, I::g1))});
  if (stray > 1e-8) {
    std::ostringstream msg;
    msg << "X-state shortcut needs a decoupled |g,0> level, found coherence " << stray;
    throw FormError(msg.str());
  }
  return 2.0 * std::abs(rho3(I::e0, I::g1));
}

}  // namespace cmax::entanglement
