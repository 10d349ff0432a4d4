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

#include "cmax/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cmax/optimize.hpp"

namespace cmax::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(x)/x and sinh(x)/x, accurate through x -> 0.
double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double sinhc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
  }
  return std::sinh(x) / x;
}

struct RealAmplitudes {
  double e0;  // c_e0 is real
  double g1;  // c_g1 = -i * g1
};

RealAmplitudes evaluate(const RegimeBranch& branch, double xi, double tau) {
  const double w = branch.omega;
  switch (branch.kind) {
    case Regime::critical: {
      const double decay = std::exp(-tau);
      return {decay * (1.0 + tau), tau * decay};
    }
    case Regime::underdamped: {
      const double decay = std::exp(-tau);
      const double s = tau * sinc(w * tau);
      return {decay * (std::cos(w * tau) + s), decay * xi * s};
    }
    case Regime::overdamped: {
      // e^-tau cosh(w tau) and e^-tau sinh(w tau)/w written with decaying
      // exponentials only; 1 - w is formed as xi^2/(1 + w) to keep digits
      // at small xi.
      const double slow = std::exp(-tau * (xi * xi / (1.0 + w)));
      const double fast = std::exp(-tau * (1.0 + w));
      const double ch = 0.5 * (slow + fast);
      const double wt = w * tau;
      const double sh_over_w = wt < 1e-2 ? tau * std::exp(-tau) * sinhc(wt) : 0.5 * (slow - fast) / w;
      return {ch + sh_over_w, xi * sh_over_w};
    }
  }
  return {1.0, 0.0};
}

}  // namespace

RegimeBranch classify(const ModelParams& params) {
  const double xi = params.xi();
  if (std::abs(xi - 1.0) < kCriticalWindow) return {Regime::critical, 0.0};
  if (xi > 1.0) return {Regime::underdamped, std::sqrt((xi - 1.0) * (xi + 1.0))};
  return {Regime::overdamped, std::sqrt((1.0 - xi) * (1.0 + xi))};
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::underdamped:
      return "underdamped";
    case Regime::overdamped:
      return "overdamped";
    case Regime::critical:
      return "critical";
  }
  return "?";
}

PureAmplitudes amplitudes(const ModelParams& params, RescaledTime tau) {
  const RealAmplitudes a = evaluate(classify(params), params.xi(), tau.tau);
  return PureAmplitudes{complex(a.e0, 0.0), complex(0.0, -a.g1)};
}

double survival_probability(const ModelParams& params, RescaledTime tau) {
  return amplitudes(params, tau).norm_squared();
}

double concurrence(const ModelParams& params, RescaledTime tau) {
  const RegimeBranch branch = classify(params);
  const double xi = params.xi();
  const RealAmplitudes a = evaluate(branch, xi, tau.tau);
  if (branch.kind != Regime::underdamped) {
    return 2.0 * std::abs(a.e0) * std::abs(a.g1);
  }
  const double w = branch.omega;
  const double x = w * tau.tau;
  const double num = std::abs(xi * std::sin(x));
  const double den = std::abs(w * std::cos(x) + std::sin(x));
  const double theta = std::atan2(num, den);
  const double norm = a.e0 * a.e0 + a.g1 * a.g1;
  return norm * std::sin(2.0 * theta);
}

std::optional<RescaledTime> t_opt_formula(const ModelParams& params) {
  const RegimeBranch branch = classify(params);
  if (branch.kind != Regime::underdamped) return std::nullopt;
  const double kappa = ModelParams::kappa_rescaled();
  const double lambda = params.lambda_rescaled();
  const double omega = branch.omega;
  const double omega2 = omega * omega;
  const double radicand =
      (kappa * kappa + 12.0 * omega2 - 4.0 * lambda * std::sqrt(kappa * kappa + 8.0 * omega2)) / omega2;
  if (!std::isfinite(radicand) || radicand < 0.0) return std::nullopt;
  const double t = std::abs(2.0 * std::atan(0.5 * std::sqrt(radicand)) / omega);
  return RescaledTime{t};
}

double search_window(double xi) {
  double window = 10.0;
  if (xi > 1.0 + kCriticalWindow) {
    window = std::max(window, 4.0 * kPi / std::sqrt((xi - 1.0) * (xi + 1.0)));
  } else if (xi < 1.0 - kCriticalWindow) {
    window = std::max(window, 3.0 * std::log(2.0 / xi));
  }
  return window;
}

NumericOptimum t_opt_numeric(const ModelParams& params) {
  const RegimeBranch branch = classify(params);
  const double window = search_window(params.xi());
  std::size_t points = 4096;
  if (branch.kind == Regime::underdamped) {
    // >= 32 samples per half Rabi period pi/omega.
    const double needed = std::ceil(32.0 * window * branch.omega / kPi) + 1.0;
    points = static_cast<std::size_t>(std::clamp(needed, 4096.0, 16777216.0));
  }
  auto objective = [&](double tau) { return concurrence(params, RescaledTime{tau}); };
  const optimize::Maximum m = optimize::scan_then_refine(objective, 0.0, window, points, 1e-10);
  if (m.value < 1e-14) return NumericOptimum{RescaledTime{0.0}, 0.0, true};
  return NumericOptimum{RescaledTime{m.x}, m.value, false};
}

std::string to_string(OptimumSource source) {
  return source == OptimumSource::formula ? "formula" : "numeric";
}

OptimumRecord c_max(const ModelParams& params) {
  const NumericOptimum numeric = t_opt_numeric(params);
  OptimumRecord rec;
  rec.xi = params.xi();
  rec.tau_opt = numeric.tau;
  rec.c_max = numeric.value;
  rec.source = OptimumSource::numeric;
  rec.zero_maximum = numeric.zero_maximum;
  if (const auto formula = t_opt_formula(params)) {
    if (std::abs(formula->tau - numeric.tau.tau) < 1e-6) {
      rec.tau_opt = *formula;
      rec.c_max = concurrence(params, *formula);
      rec.source = OptimumSource::formula;
    }
  }
  return rec;
}

double default_derivative_step(double xi) { return 1e-4 * std::max(1.0, xi); }

double c_max_derivative(double xi, double h) {
  if (!(h > 0.0) || !(xi > h)) {
    std::ostringstream msg;
    msg << "c_max_derivative requires xi > h > 0 (xi=" << xi << ", h=" << h << ")";
    throw DomainError(msg.str());
  }
  const double up = c_max(ModelParams::from_xi(xi + h)).c_max;
  const double down = c_max(ModelParams::from_xi(xi - h)).c_max;
  return (up - down) / (2.0 * h);
}

}  // namespace cmax::analytic
