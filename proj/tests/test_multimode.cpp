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

#include <cmath>
#include <numbers>
#include <vector>

#include <omp.h>

#include <doctest.h>

#include "cmax/analytic.hpp"
#include "cmax/multimode.hpp"

using namespace cmax;
using namespace cmax::multimode;

namespace {

std::vector<double> grid(double t_end, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t_end * i / (n - 1);
  return t;
}

}  // namespace

TEST_CASE("Lorentzian density integrates to one") {
  CHECK(lorentzian(0.0) == doctest::Approx(0.5 / std::numbers::pi));
  double s = 0.0;
  const double h = 1e-3;
  for (double x = -2000.0; x <= 2000.0; x += h) s += lorentzian(x) * h;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("bath sampling") {
  const auto params = ModelParams::from_xi(2.0);
  SUBCASE("odd count is symmetric with a mode at zero") {
    const auto bath = sample_bath(params, 1001, 10.0);
    CHECK(bath.n_modes == 1001);
    CHECK(bath.detunings.front() == -40.0);
    CHECK(bath.detunings.back() == 40.0);
    CHECK(bath.detunings[500] == 0.0);
    for (std::size_t k = 0; k < bath.n_modes; ++k) {
      CHECK(bath.detunings[k] == -bath.detunings[bath.n_modes - 1 - k]);
      CHECK(bath.couplings[k] == bath.couplings[bath.n_modes - 1 - k]);
    }
    CHECK(bath.spacing() == doctest::Approx(0.08));
    CHECK(bath.recurrence_horizon() == doctest::Approx(2.0 * std::numbers::pi / 0.08));
  }
  SUBCASE("even count has no mode at zero") {
    const auto bath = sample_bath(params, 10, 1.0);
    for (double d : bath.detunings) CHECK(d != 0.0);
  }
  SUBCASE("coupling mass is xi^2 times the in-window weight") {
    for (double w : {1.0, 10.0, 60.0}) {
      const auto bath = sample_bath(params, 4001, w);
      const double expected = 4.0 * (2.0 / std::numbers::pi) * std::atan(2.0 * w);
      CHECK(bath.coupling_mass() == doctest::Approx(expected).epsilon(1e-5));
    }
  }
  SUBCASE("kernel approaches xi^2 exp(-2 tau) at short times") {
    const auto bath = sample_bath(params, 2001, 40.0);
    for (double tau : {0.0, 0.25, 0.5, 1.0}) {
      const complex k = bath.correlation(tau);
      CHECK(std::abs(k - 4.0 * std::exp(-2.0 * tau)) / 4.0 < 0.01);
    }
  }
  CHECK_THROWS_AS(sample_bath(params, 1, 1.0), DomainError);
  CHECK_THROWS_AS(sample_bath(params, 11, 0.0), DomainError);
  CHECK_THROWS_AS(sample_bath(params, 11, std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("single undamped mode gives vacuum Rabi oscillation") {
  const auto bath = single_mode_bath(ModelParams::from_xi(3.0));
  CHECK(std::isinf(bath.recurrence_horizon()));
  const auto states = evolve(bath, 4.0, 81, 1e-3);
  for (const auto& s : states) {
    CHECK(std::abs(s.c_e - std::cos(3.0 * s.tau)) < 1e-9);
    CHECK(std::abs(s.c_k[0] - complex(0.0, -std::sin(3.0 * s.tau))) < 1e-9);
  }
}

TEST_CASE("norm is conserved") {
  const auto bath = sample_bath(ModelParams::from_xi(5.0), 801, 20.0);
  for (const auto& s : evolve(bath, 5.0, 51)) CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
}

TEST_CASE("qubit amplitude converges to the continuum solution") {
  const auto params = ModelParams::from_xi(2.0);
  const auto times = grid(3.0, 61);
  double previous = 1.0;
  for (std::size_t n : {101u, 401u, 1601u}) {
    const auto bath = sample_bath(params, n, 40.0);
    double err = 0.0, err_g = 0.0;
    for (const auto& s : evolve(bath, times)) {
      const auto a = analytic::amplitudes(params, RescaledTime::of(s.tau));
      err = std::max(err, std::abs(s.qubit_population() - std::norm(a.c_e0)));
      err_g = std::max(err_g, std::abs(collective_amplitude(bath, s) - a.c_g1));
    }
    CAPTURE(n);
    CHECK(err < previous);
    previous = err;
    if (n == 1601) {
      CHECK(err < 1e-5);
      CHECK(err_g < 5e-3);
    }
  }
}

TEST_CASE("serial and parallel kernels") {
  const auto bath = sample_bath(ModelParams::from_xi(2.0), 3001, 30.0);
  const auto times = grid(1.0, 11);
  const auto serial = evolve(bath, times, 0.0, Execution::serial);

  omp_set_num_threads(1);
  const auto one = evolve(bath, times, 0.0, Execution::parallel);
  omp_set_num_threads(3);
  const auto three = evolve(bath, times, 0.0, Execution::parallel);
  omp_set_num_threads(8);
  const auto eight = evolve(bath, times, 0.0, Execution::parallel);

  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(std::abs(serial[i].c_e - one[i].c_e) < 1e-13);
    CHECK(one[i].c_e == three[i].c_e);
    CHECK(one[i].c_e == eight[i].c_e);
    CHECK(one[i].c_k == eight[i].c_k);
  }
}

TEST_CASE("concurrence measures") {
  MultimodeState s;
  s.c_e = complex(std::sqrt(0.5), 0.0);
  s.c_k = {complex(0.0, std::sqrt(0.5))};
  CHECK(reservoir_concurrence(s) == doctest::Approx(1.0));
  s.c_e = 1.0;
  s.c_k = {0.0};
  CHECK(reservoir_concurrence(s) == 0.0);

  const auto bath = single_mode_bath(ModelParams::from_xi(1.0));
  s.c_e = complex(0.6, 0.0);
  s.c_k = {complex(0.0, 0.8)};
  CHECK(std::abs(collective_amplitude(bath, s) - complex(0.0, 0.8)) < 1e-15);
  CHECK(extractable_concurrence(bath, s) == doctest::Approx(0.96));
}

TEST_CASE("evolve argument checks") {
  const auto bath = sample_bath(ModelParams::from_xi(1.0), 11, 1.0);
  const std::vector<double> bad{0.5, 0.1};
  CHECK_THROWS_AS(evolve(bath, bad), DomainError);
  CHECK_THROWS_AS(evolve(bath, -1.0, 3), DomainError);
  CHECK(max_step(bath) == doctest::Approx(0.05 / 4.0));
}
