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
#include <limits>
#include <numbers>

#include <doctest.h>

#include "cmax/model.hpp"

using namespace cmax;

TEST_CASE("from_xi accepts positive finite values only") {
  CHECK(ModelParams::from_xi(2.0).xi() == 2.0);
  CHECK(ModelParams::from_xi(1e-300).xi() == 1e-300);
  CHECK_THROWS_AS(ModelParams::from_xi(0.0), DomainError);
  CHECK_THROWS_AS(ModelParams::from_xi(-1.0), DomainError);
  CHECK_THROWS_AS(ModelParams::from_xi(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(ModelParams::from_xi(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("rescaled couplings") {
  const auto p = ModelParams::from_xi(3.5);
  CHECK(p.lambda_rescaled() == 3.5);
  CHECK(ModelParams::kappa_rescaled() == 4.0);
  CHECK_FALSE(p.kappa().has_value());
  CHECK_FALSE(p.lambda0().has_value());
}

TEST_CASE("physical rates convert to xi = 4 lambda0 / kappa") {
  const auto a = params_from_physical(Rate{10.0, RateUnit::rad_per_s}, Rate{5.0, RateUnit::rad_per_s});
  CHECK(a.xi() == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(a.kappa().has_value());
  CHECK(a.kappa()->unit == RateUnit::rad_per_s);

  // Mixed units: kappa 1 MHz cyclic, lambda0 2*pi rad/us.
  const auto b = params_from_physical(Rate{1.0, RateUnit::cyclic_mhz}, Rate{2.0 * std::numbers::pi, RateUnit::rad_per_us});
  CHECK(b.xi() == doctest::Approx(4.0).epsilon(1e-14));

  CHECK_THROWS_AS(params_from_physical(Rate{0.0}, Rate{1.0}), DomainError);
  CHECK_THROWS_AS(params_from_physical(Rate{1.0}, Rate{-1.0}), DomainError);
  CHECK(to_string(RateUnit::cyclic_mhz) == "MHz(cyclic)");
}

TEST_CASE("tau_from_time") {
  CHECK(tau_from_time(2e-6, Rate{4.0, RateUnit::rad_per_us}).tau == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(tau_from_time(0.0, Rate{1.0}).tau == 0.0);
  CHECK_THROWS_AS(tau_from_time(-1.0, Rate{1.0}), DomainError);
  CHECK_THROWS_AS(tau_from_time(1.0, Rate{0.0}), DomainError);
  CHECK_THROWS_AS(RescaledTime::of(-1e-300), DomainError);
  CHECK_THROWS_AS(RescaledTime::of(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("pure_to_density places the lost weight in |g,0>") {
  PureAmplitudes psi{complex(0.6, 0.0), complex(0.0, -0.5)};
  const auto rho = pure_to_density(psi);
  using I = DensityMatrix3::Index;
  CHECK(rho.population(I::e0) == doctest::Approx(0.36));
  CHECK(rho.population(I::g1) == doctest::Approx(0.25));
  CHECK(rho.population(I::g0) == doctest::Approx(0.39));
  CHECK(std::abs(rho(I::e0, I::g1) - complex(0.0, 0.3)) < 1e-15);
  CHECK(std::abs(rho(I::g1, I::e0) - complex(0.0, -0.3)) < 1e-15);
  CHECK_NOTHROW(validate(rho));

  PureAmplitudes too_big{complex(1.0, 0.0), complex(0.1, 0.0)};
  CHECK_THROWS_AS(pure_to_density(too_big), InvariantError);
}

TEST_CASE("validate rejects non-physical matrices") {
  CHECK_NOTHROW(validate(DensityMatrix3::initial()));
  CHECK_NOTHROW(validate(DensityMatrix3::ground()));

  auto off_trace = DensityMatrix3::initial();
  off_trace.entries(2, 2) = 1e-6;
  CHECK_THROWS_AS(validate(off_trace), InvariantError);

  auto non_hermitian = DensityMatrix3::initial();
  non_hermitian.entries(0, 1) = 1e-3;
  CHECK_THROWS_AS(validate(non_hermitian), InvariantError);

  DensityMatrix3 negative;
  negative.entries(0, 0) = 1.1;
  negative.entries(1, 1) = -0.1;
  CHECK_THROWS_AS(validate(negative), InvariantError);

  DensityMatrix3 tiny_negative;
  tiny_negative.entries(0, 0) = 1.0 + 1e-10;
  tiny_negative.entries(1, 1) = -1e-10;
  CHECK_NOTHROW(validate(tiny_negative));
  CHECK(tiny_negative.min_eigenvalue() == doctest::Approx(-1e-10).epsilon(1e-6));
}
