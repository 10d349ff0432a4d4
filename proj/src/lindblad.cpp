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

#include "cmax/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cmax::lindblad {

namespace {

using Mat = Eigen::Matrix3cd;
using I = DensityMatrix3::Index;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI controller constants (Hairer & Wanner, DOPRI5).
constexpr double kBeta = 0.04;
constexpr double kAlpha = 0.2 - 0.75 * kBeta;
constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;
constexpr double kMinStep = 1e-14;
constexpr std::size_t kMaxSteps = 50'000'000;

Mat generator(const Mat& rho, double coupling) {
  // -i[H, rho] with H = coupling (|e0><g1| + |g1><e0|).
  Mat h_rho = Mat::Zero();
  h_rho.row(I::e0) = coupling * rho.row(I::g1);
  h_rho.row(I::g1) = coupling * rho.row(I::e0);
  Mat rho_h = Mat::Zero();
  rho_h.col(I::e0) = coupling * rho.col(I::g1);
  rho_h.col(I::g1) = coupling * rho.col(I::e0);
  Mat out = complex(0.0, -1.0) * (h_rho - rho_h);

  // Photon loss a = |g0><g1| at rate 4.
  constexpr double kappa = ModelParams::kappa_rescaled();
  out(I::g0, I::g0) += kappa * rho(I::g1, I::g1);
  out.row(I::g1) -= 0.5 * kappa * rho.row(I::g1);
  out.col(I::g1) -= 0.5 * kappa * rho.col(I::g1);
  return out;
}

double error_norm(const Mat& err, const Mat& y0, const Mat& y1, double tol) {
  double worst = 0.0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double scale = tol * (1.0 + std::max(std::abs(y0(r, c)), std::abs(y1(r, c))));
      worst = std::max(worst, std::abs(err(r, c)) / scale);
    }
  }
  return worst;
}

void check_sample(const Sample& s, double threshold) {
  try {
    validate(s.rho, threshold);
  } catch (const InvariantError& e) {
    std::ostringstream msg;
    msg << "integration failure at tau=" << s.tau << ": " << e.what();
    throw NumericError(msg.str());
  }
}

}  // namespace

void LindbladConfig::check() const {
  if (!(dt > 0.0) || !(tol > 0.0) || !(t_end >= 0.0) || !std::isfinite(t_end)) {
    std::ostringstream msg;
    msg << "invalid Lindblad config (dt=" << dt << ", tol=" << tol << ", t_end=" << t_end << ")";
    throw DomainError(msg.str());
  }
}

DensityMatrix3 rhs(const DensityMatrix3& rho, const ModelParams& params, double coupling_sign) {
  return DensityMatrix3{generator(rho.entries, coupling_sign * params.lambda_rescaled())};
}

std::vector<Sample> integrate(const LindbladConfig& config, std::span<const double> sample_times,
                              IntegrationStats* stats) {
  config.check();
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    const double t = sample_times[i];
    if (!(t >= 0.0) || t > config.t_end || (i > 0 && t < sample_times[i - 1])) {
      throw DomainError("sample times must be non-decreasing and inside [0, t_end]");
    }
  }

  const double coupling = config.coupling_sign * config.params.lambda_rescaled();
  const double threshold = std::max(10.0 * config.tol, 1e-9);
  auto f = [coupling](const Mat& y) { return generator(y, coupling); };

  std::vector<Sample> out;
  out.reserve(sample_times.size());
  IntegrationStats local;
  local.min_step = config.dt;

  Mat y = DensityMatrix3::initial().entries;
  Mat k1 = f(y);
  double t = 0.0;
  double h = std::min(config.dt, std::max(config.t_end, kMinStep));
  double err_prev = 1e-4;
  std::size_t next = 0;

  // Steps are clipped to land on sample times, so samples are step values.
  auto emit_at = [&](double t_now, const Mat& y_now) {
    while (next < sample_times.size() && sample_times[next] <= t_now) {
      Sample s{sample_times[next], DensityMatrix3{y_now}};
      check_sample(s, threshold);
      out.push_back(std::move(s));
      ++next;
    }
  };

  emit_at(0.0, y);

  std::size_t steps = 0;
  while (t < config.t_end) {
    if (++steps > kMaxSteps) throw NumericError("Lindblad integration exceeded the step budget");
    const double target = next < sample_times.size() ? sample_times[next] : config.t_end;
    const bool clipped = t + h >= target;
    const double step = clipped ? target - t : h;

    const Mat k2 = f(y + step * (a21 * k1));
    const Mat k3 = f(y + step * (a31 * k1 + a32 * k2));
    const Mat k4 = f(y + step * (a41 * k1 + a42 * k2 + a43 * k3));
    const Mat k5 = f(y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Mat k6 = f(y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Mat y_new = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Mat k7 = f(y_new);
    const Mat err = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double e = error_norm(err, y, y_new, config.tol);
    if (e <= 1.0) {
      t = clipped ? target : t + step;
      y = y_new;
      k1 = k7;
      emit_at(t, y);
      ++local.accepted;
      local.min_step = std::min(local.min_step, step);
      const double en = std::max(e, 1e-10);
      double factor = kSafety * std::pow(en, -kAlpha) * std::pow(err_prev, kBeta);
      factor = std::clamp(factor, kMinFactor, kMaxFactor);
      err_prev = std::max(e, 1e-4);
      h = clipped ? std::max(h, step * factor) : step * factor;
    } else {
      ++local.rejected;
      h = step * std::max(kMinFactor, kSafety * std::pow(e, -kAlpha));
    }
    if (h < kMinStep && t < config.t_end) {
      std::ostringstream msg;
      msg << "step size underflow (h=" << h << ") at tau=" << t << "; problem too stiff for the explicit pair";
      throw NumericError(msg.str());
    }
  }
  // t_end == 0 or samples exactly at t_end not yet emitted.
  emit_at(config.t_end, y);

  if (stats) *stats = local;
  return out;
}

std::vector<Sample> integrate(const LindbladConfig& config, std::size_t n_samples, IntegrationStats* stats) {
  std::vector<double> times(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    times[i] = n_samples == 1 ? config.t_end
                              : config.t_end * static_cast<double>(i) / static_cast<double>(n_samples - 1);
  }
  if (n_samples > 1) times.back() = config.t_end;
  return integrate(config, times, stats);
}

}  // namespace cmax::lindblad
