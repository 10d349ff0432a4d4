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
#include <random>

#include <doctest.h>

#include "cmax/analytic.hpp"
#include "cmax/entanglement.hpp"
#include "oracles.hpp"

using namespace cmax;
using namespace cmax::entanglement;

namespace {

// Basis |e1>, |e0>, |g1>, |g0>.
TwoQubitDensity pure4(complex a, complex b, complex c, complex d) {
  Eigen::Vector4cd v(a, b, c, d);
  v.normalize();
  return TwoQubitDensity{v * v.adjoint()};
}

DensityMatrix3 random_model_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> phase(-3.14159, 3.14159);
  const double pe = u(rng);
  const double pg = u(rng) * (1.0 - pe);
  const complex coh = std::sqrt(pe * pg) * std::polar(1.0, phase(rng));
  DensityMatrix3 rho;
  using I = DensityMatrix3::Index;
  rho.entries(I::e0, I::e0) = pe;
  rho.entries(I::g1, I::g1) = pg;
  rho.entries(I::g0, I::g0) = 1.0 - pe - pg;
  rho.entries(I::e0, I::g1) = coh;
  rho.entries(I::g1, I::e0) = std::conj(coh);
  return rho;
}

}  // namespace

TEST_CASE("embedding keeps the |e,1> row and column empty") {
  const auto rho = pure_to_density(analytic::amplitudes(ModelParams::from_xi(2.0), RescaledTime::of(0.4)));
  const auto r4 = embed(rho);
  CHECK(r4.entries.row(0).norm() == 0.0);
  CHECK(r4.entries.col(0).norm() == 0.0);
  CHECK((r4.entries.bottomRightCorner<3, 3>() - rho.entries).norm() == 0.0);
}

TEST_CASE("textbook states") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(wootters_concurrence(pure4(0, s, s, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence(pure4(s, 0, 0, s)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence(pure4(1, 0, 0, 0)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(wootters_concurrence(pure4(0.5, 0.5, 0.5, 0.5)) < 1e-12);
  // a|01> + b|10>: C = 2|ab|.
  CHECK(wootters_concurrence(pure4(0, 0.6, complex(0, 0.8), 0)) == doctest::Approx(0.96).epsilon(1e-12));
}

TEST_CASE("Werner states") {
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::Matrix4cd bell = pure4(0, s, -s, 0).entries;
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const TwoQubitDensity w{p * bell + (1.0 - p) / 4.0 * Eigen::Matrix4cd::Identity()};
    CAPTURE(p);
    CHECK(wootters_concurrence(w) == doctest::Approx(std::max(0.0, (3.0 * p - 1.0) / 2.0)).epsilon(1e-12));
  }
}

TEST_CASE("agrees with an eigenvalue-based reference on full-rank states") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Eigen::Matrix4cd rho = oracle::random_density4(rng);
    CHECK(wootters_concurrence(TwoQubitDensity{rho}) == doctest::Approx(oracle::wootters_eig(rho)).epsilon(1e-8));
  }
}

TEST_CASE("invariant under local unitaries") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0.0, 6.283);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Matrix4cd rho = oracle::random_density4(rng);
    auto u2 = [&]() {
      const double a = ang(rng), b = ang(rng), c = ang(rng);
      Eigen::Matrix2cd u;
      u << std::polar(std::cos(a), b), std::polar(std::sin(a), c), -std::polar(std::sin(a), -c),
          std::polar(std::cos(a), -b);
      return u;
    };
    const Eigen::Matrix2cd ua = u2(), ub = u2();
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) u.block<2, 2>(2 * r, 2 * c) = ua(r, c) * ub;
    const double c0 = wootters_concurrence(TwoQubitDensity{rho});
    const double c1 = wootters_concurrence(TwoQubitDensity{u * rho * u.adjoint()});
    CHECK(c1 == doctest::Approx(c0).epsilon(1e-9));
  }
}

TEST_CASE("model states: Wootters equals 2|rho_e0,g1|") {
  std::mt19937_64 rng(20240917);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto rho = random_model_state(rng);
    worst = std::max(worst, std::abs(wootters_concurrence(embed(rho)) - xstate_concurrence(rho)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("evolved states: Wootters equals the closed form") {
  for (double xi : {0.3, 1.0, 2.0, 10.0}) {
    for (double tau : {0.0, 0.1, 0.5, 2.0}) {
      const auto params = ModelParams::from_xi(xi);
      const auto rho = pure_to_density(analytic::amplitudes(params, RescaledTime::of(tau)));
      CHECK(wootters_concurrence(embed(rho)) ==
            doctest::Approx(analytic::concurrence(params, RescaledTime::of(tau))).epsilon(1e-10));
    }
  }
}

TEST_CASE("xstate_concurrence rejects |g,0> coherences") {
  auto rho = DensityMatrix3::initial();
  rho.entries(0, 0) = 0.5;
  rho.entries(2, 2) = 0.5;
  rho.entries(0, 2) = 0.1;
  rho.entries(2, 0) = 0.1;
  CHECK_THROWS_AS(xstate_concurrence(rho), FormError);
  rho.entries(0, 2) = 1e-9;
  rho.entries(2, 0) = 1e-9;
  CHECK_NOTHROW(xstate_concurrence(rho));
}

TEST_CASE("negative eigenvalues") {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(1, 1) = 0.5 + 5e-10;
  m(2, 2) = 0.5;
  m(3, 3) = -5e-10;
  CHECK(wootters_concurrence(TwoQubitDensity{m}) == doctest::Approx(0.0).epsilon(1e-9));
  m(3, 3) = -1e-6;
  CHECK_THROWS_AS(wootters_concurrence(TwoQubitDensity{m}), InvariantError);
}
