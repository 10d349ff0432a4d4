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

#include "cmax/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace cmax::multimode {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::ptrdiff_t kBlock = 512;
const complex kMinusI{0.0, -1.0};

std::ptrdiff_t length(std::span<const complex> s) { return static_cast<std::ptrdiff_t>(s.size()); }

// out = y + a * k, elementwise.
void axpy(std::span<const complex> y, double a, std::span<const complex> k, std::span<complex> out, Execution exec) {
  const std::ptrdiff_t n = length(y);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = y[i] + a * k[i];
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = y[i] + a * k[i];
  }
}

void rk4_combine(std::span<complex> y, double h, std::span<const complex> k1, std::span<const complex> k2,
                 std::span<const complex> k3, std::span<const complex> k4, Execution exec) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(y.size());
  const double w = h / 6.0;
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

}  // namespace

double DiscretizedBath::spacing() const {
  if (detunings.size() < 2) return 0.0;
  return detunings[1] - detunings[0];
}

double DiscretizedBath::recurrence_horizon() const {
  const double d = spacing();
  return d > 0.0 ? 2.0 * kPi / d : std::numeric_limits<double>::infinity();
}

double DiscretizedBath::coupling_mass() const {
  double s = 0.0;
  for (double g : couplings) s += g * g;
  return s;
}

complex DiscretizedBath::correlation(double tau) const {
  complex s{0.0, 0.0};
  for (std::size_t k = 0; k < n_modes; ++k) {
    s += couplings[k] * couplings[k] * std::exp(complex(0.0, -detunings[k] * tau));
  }
  return s;
}

double MultimodeState::norm_squared() const {
  double s = std::norm(c_e);
  for (const complex& c : c_k) s += std::norm(c);
  return s;
}

double lorentzian(double delta) { return (1.0 / kPi) * 2.0 / (delta * delta + 4.0); }

DiscretizedBath sample_bath(const ModelParams& params, std::size_t n_modes, double window) {
  if (n_modes < 2) throw DomainError("sample_bath needs at least two modes");
  if (!(window > 0.0) || !std::isfinite(window)) throw DomainError("bath window must be finite and > 0");

  DiscretizedBath bath;
  bath.window = window;
  bath.n_modes = n_modes;
  bath.xi = params.xi();
  bath.detunings.resize(n_modes);
  bath.couplings.resize(n_modes);

  const double edge = 4.0 * window;
  const double step = 2.0 * edge / static_cast<double>(n_modes - 1);
  for (std::size_t k = 0; k < n_modes; ++k) {
    // Symmetric by construction: pair k with n-1-k.
    const double offset = step * static_cast<double>(k);
    const double delta = k < n_modes / 2 ? -edge + offset : edge - step * static_cast<double>(n_modes - 1 - k);
    const double weight = (k == 0 || k + 1 == n_modes) ? 0.5 * step : step;
    bath.detunings[k] = delta;
    bath.couplings[k] = params.xi() * std::sqrt(lorentzian(delta) * weight);
  }
  if (n_modes % 2 == 1) bath.detunings[n_modes / 2] = 0.0;
  return bath;
}

DiscretizedBath single_mode_bath(const ModelParams& params) {
  DiscretizedBath bath;
  bath.window = 0.0;
  bath.n_modes = 1;
  bath.xi = params.xi();
  bath.detunings = {0.0};
  bath.couplings = {params.xi()};
  return bath;
}

double max_step(const DiscretizedBath& bath) {
  double fastest = bath.xi;
  for (double d : bath.detunings) fastest = std::max(fastest, std::abs(d));
  return 0.05 / fastest;
}

void derivative(const DiscretizedBath& bath, complex c_e, std::span<const complex> c_k, complex& dc_e,
                std::span<complex> dc_k, Execution exec) {
  const std::ptrdiff_t n = length(c_k);
  const double* g = bath.couplings.data();
  const double* d = bath.detunings.data();

  if (exec == Execution::serial) {
    complex field{0.0, 0.0};
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      field += g[k] * c_k[k];
      dc_k[k] = kMinusI * (d[k] * c_k[k] + g[k] * c_e);
    }
    dc_e = kMinusI * field;
    return;
  }

  const std::ptrdiff_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<complex> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const std::ptrdiff_t lo = b * kBlock;
    const std::ptrdiff_t hi = std::min(n, lo + kBlock);
    complex acc{0.0, 0.0};
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      acc += g[k] * c_k[k];
      dc_k[k] = kMinusI * (d[k] * c_k[k] + g[k] * c_e);
    }
    partial[static_cast<std::size_t>(b)] = acc;
  }
  complex field{0.0, 0.0};
  for (const complex& p : partial) field += p;
  dc_e = kMinusI * field;
}

std::vector<MultimodeState> evolve(const DiscretizedBath& bath, std::span<const double> sample_times, double dt,
                                   Execution exec) {
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    if (!(sample_times[i] >= 0.0) || (i > 0 && sample_times[i] < sample_times[i - 1])) {
      throw DomainError("sample times must be non-decreasing and >= 0");
    }
  }
  const double h_max = dt > 0.0 ? dt : max_step(bath);
  const std::size_t n = bath.n_modes;

  complex c_e{1.0, 0.0};
  std::vector<complex> y(n), tmp(n), k1(n), k2(n), k3(n), k4(n);
  complex e1, e2, e3, e4;
  double t = 0.0;

  std::vector<MultimodeState> out;
  out.reserve(sample_times.size());
  for (double target : sample_times) {
    const double span = target - t;
    if (span > 0.0) {
      const auto steps = static_cast<std::size_t>(std::ceil(span / h_max));
      const double h = span / static_cast<double>(steps);
      for (std::size_t s = 0; s < steps; ++s) {
        derivative(bath, c_e, y, e1, k1, exec);
        axpy(y, 0.5 * h, k1, tmp, exec);
        derivative(bath, c_e + 0.5 * h * e1, tmp, e2, k2, exec);
        axpy(y, 0.5 * h, k2, tmp, exec);
        derivative(bath, c_e + 0.5 * h * e2, tmp, e3, k3, exec);
        axpy(y, h, k3, tmp, exec);
        derivative(bath, c_e + h * e3, tmp, e4, k4, exec);
        rk4_combine(y, h, k1, k2, k3, k4, exec);
        c_e += (h / 6.0) * (e1 + 2.0 * e2 + 2.0 * e3 + e4);
      }
      t = target;
    }
    MultimodeState state{target, c_e, y};
    const double drift = std::abs(state.norm_squared() - 1.0);
    if (drift > 1e-6) {
      std::ostringstream msg;
      msg << "multimode norm drift " << drift << " at tau=" << target;
      throw NumericError(msg.str());
    }
    out.push_back(std::move(state));
  }
  return out;
}

std::vector<MultimodeState> evolve(const DiscretizedBath& bath, double t_end, std::size_t n_samples, double dt,
                                   Execution exec) {
  if (!(t_end >= 0.0)) throw DomainError("t_end must be >= 0");
  std::vector<double> times(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    times[i] = n_samples == 1 ? t_end : t_end * static_cast<double>(i) / static_cast<double>(n_samples - 1);
  }
  return evolve(bath, times, dt, exec);
}

double reservoir_concurrence(const MultimodeState& state) {
  const double pe = std::min(1.0, state.qubit_population());
  return 2.0 * std::sqrt(pe) * std::sqrt(std::max(0.0, 1.0 - pe));
}

complex collective_amplitude(const DiscretizedBath& bath, const MultimodeState& state) {
  complex s{0.0, 0.0};
  for (std::size_t k = 0; k < bath.n_modes; ++k) s += bath.couplings[k] * state.c_k[k];
  return s / bath.xi;
}

double extractable_concurrence(const DiscretizedBath& bath, const MultimodeState& state) {
  return 2.0 * std::abs(state.c_e) * std::abs(collective_amplitude(bath, state));
}

}  // namespace cmax::multimode
