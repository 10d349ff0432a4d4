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

#include "cmax/model.hpp"

namespace cmax::entanglement {

/// Qubit (x) two-level truncation of the mode, ordered (|e,1>, |e,0>, |g,1>, |g,0>).
struct TwoQubitDensity {
  Eigen::Matrix4cd entries = Eigen::Matrix4cd::Zero();
};

/// Thrown when the X-state shortcut is applied to a state with |g,0> coherences.
class FormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

TwoQubitDensity embed(const DensityMatrix3& rho3);

/// Wootters concurrence max(0, s1 - s2 - s3 - s4), s_i the square roots of
/// the eigenvalues of R = sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho) in
/// descending order. They are obtained as singular values of
/// sqrt(rho) sqrt(rho~) so that zero eigenvalues of R stay at roundoff
/// instead of its square root. Eigenvalues of rho in [-1e-9, 0) are
/// clipped to zero.
double wootters_concurrence(const TwoQubitDensity& rho);

/// 2|rho_{e0,g1}|, valid when |g,0> carries no coherence.
double xstate_concurrence(const DensityMatrix3& rho3);

}  // namespace cmax::entanglement
