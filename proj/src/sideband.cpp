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

#include "cmax/sideband.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cmax/optimize.hpp"

namespace cmax::sideband {

namespace {

constexpr double kBig = 1e250;
constexpr double kBigInv = 1e-250;

double positive_finite(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << name << " must be finite and > 0, got " << v;
    throw DomainError(msg.str());
  }
  return v;
}

}  // namespace

void SidebandConfig::check() const {
  positive_finite(g, "g");
  positive_finite(nu, "nu");
  if (n < 0 || n > kMaxOrder) throw DomainError("sideband order must be in [0, 64]");
  if (!std::isfinite(epsilon)) throw DomainError("epsilon must be finite");
  if (omega_q && omega_r && n >= 1) {
    const double expected = (*omega_r - *omega_q) / n;
    if (std::abs(nu - expected) / nu >= 1e-9) {
      std::ostringstream msg;
      msg << "modulation frequency " << nu << " does not match (omega_r - omega_q)/n = " << expected;
      throw DomainError(msg.str());
    }
  }
}

double bessel_jn(int n, double mu) {
  if (n < 0 || n > kMaxOrder) throw DomainError("bessel_jn: order must be in [0, 64]");
  if (!std::isfinite(mu) || std::abs(mu) >= kMaxArgument) throw DomainError("bessel_jn: |mu| must be < 700");

  const double x = std::abs(mu);
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  // Start well above both n and x so the recurrence is dominated by J.
  const double top = std::max(static_cast<double>(n), x);
  const int m = 2 * static_cast<int>((top + 30.0 + std::sqrt(60.0 * top)) / 2.0);
  const double two_over_x = 2.0 / x;

  double next = 0.0;  // J_{j+1}
  double cur = 1.0;   // J_j, unnormalised
  double result = 0.0;
  double even_sum = 0.0;
  bool add = false;
  for (int j = m; j > 0; --j) {
    const double prev = j * two_over_x * cur - next;  // J_{j-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > kBig) {
      cur *= kBigInv;
      next *= kBigInv;
      result *= kBigInv;
      even_sum *= kBigInv;
    }
    if (add) even_sum += cur;
    add = !add;
    if (j == n) result = next;
  }
  if (n == 0) result = cur;
  const double norm = 2.0 * even_sum - cur;  // J_0 + 2 sum_{k>=1} J_2k
  result /= norm;
  return (mu < 0.0 && (n % 2 == 1)) ? -result : result;
}

double effective_coupling(const SidebandConfig& cfg) {
  cfg.check();
  return cfg.g * bessel_jn(cfg.n, cfg.epsilon / cfg.nu);
}

FirstMaximum first_maximum(int n) {
  if (n < 1 || n > kMaxOrder) throw DomainError("first_maximum: order must be in [1, 64]");
  // Past the first maximum and short of the second positive lobe.
  const double hi = n + 2.0 * std::cbrt(static_cast<double>(n)) + 3.0;
  const auto m = optimize::scan_then_refine([n](double mu) { return bessel_jn(n, mu); }, 0.0, hi, 2048, 1e-13);

  // Polish on 2 J_n' = J_{n-1} - J_{n+1}; the golden bracket is only
  // sqrt(eps) sharp at a flat top.
  auto slope = [n](double mu) { return bessel_jn(n - 1, mu) - bessel_jn(n + 1, mu); };
  const double step = hi / 2047.0;
  double lo = std::max(0.0, m.x - step), up = std::min(hi, m.x + step);
  if (!(slope(lo) > 0.0 && slope(up) < 0.0)) return {m.x, m.value};
  while (up - lo > 1e-15 * up) {
    const double mid = 0.5 * (lo + up);
    if (mid <= lo || mid >= up) break;
    (slope(mid) > 0.0 ? lo : up) = mid;
  }
  const double mu = 0.5 * (lo + up);
  return {mu, bessel_jn(n, mu)};
}

double solve_amplitude(double g, double nu, int n, double kappa, double target_xi) {
  positive_finite(g, "g");
  positive_finite(nu, "nu");
  positive_finite(kappa, "kappa");
  if (!(target_xi >= 0.0) || !std::isfinite(target_xi)) throw DomainError("target xi must be finite and >= 0");
  if (n < 1 || n > kMaxOrder) throw DomainError("sideband order must be in [1, 64] for inversion");

  const double target_lambda = target_xi * kappa / 4.0;
  if (target_lambda == 0.0) return 0.0;

  const FirstMaximum peak = first_maximum(n);
  const double ratio = target_lambda / g;
  if (ratio > peak.value) {
    const double max_xi = 4.0 * g * peak.value / kappa;
    std::ostringstream msg;
    msg << "target xi " << target_xi << " needs lambda = " << target_lambda << " > g*max J_" << n << " = "
        << g * peak.value << "; maximum achievable xi is " << max_xi;
    throw RangeError(msg.str(), max_xi);
  }

  double lo = 0.0;
  double hi = peak.mu;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (bessel_jn(n, mid) < ratio) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi) * nu;
}

int regime_preset(double xi) {
  positive_finite(xi, "xi");
  return xi < 1.0 ? 1 : 2;
}

}  // namespace cmax::sideband
