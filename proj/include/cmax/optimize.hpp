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

#include <cmath>
#include <cstddef>

namespace cmax::optimize {

struct Maximum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal f on [a, b].
/// Stops once the bracket is narrower than xtol.
template <typename F>
Maximum golden_section_max(F&& f, double a, double b, double xtol) {
  constexpr double invphi = 0.6180339887498948482;  // 1/phi
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  // Each iteration shrinks the bracket by 1/phi; 200 covers any double range.
  for (int it = 0; it < 200 && (b - a) > xtol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  // Keep the best probe; at a flat top the midpoint can lose by one ulp.
  if (fc > fx && fc >= fd) return {c, fc};
  if (fd > fx) return {d, fd};
  return {x, fx};
}

/// Uniform scan of [a, b] with n points followed by golden-section
/// refinement around the earliest strict maximum.
template <typename F>
Maximum scan_then_refine(F&& f, double a, double b, std::size_t n, double xtol) {
  const double h = (b - a) / static_cast<double>(n - 1);
  std::size_t best = 0;
  double best_value = f(a);
  for (std::size_t i = 1; i < n; ++i) {
    const double v = f(a + h * static_cast<double>(i));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double lo = best == 0 ? a : a + h * static_cast<double>(best - 1);
  const double hi = best + 1 >= n ? b : a + h * static_cast<double>(best + 1);
  Maximum m = golden_section_max(f, lo, hi, xtol);
  if (m.value < best_value) m = {a + h * static_cast<double>(best), best_value};
  return m;
}

}  // namespace cmax::optimize
