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

// Serial reference against the OpenMP kernels. Thread count comes from the
// benchmark argument; 0 is the serial path.

#include <vector>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "cmax/multimode.hpp"
#include "cmax/sweep.hpp"

namespace {

using namespace cmax;

sweep::SweepGrid heatmap_grid(sweep::Method method, std::size_t xi_steps, std::size_t tau_steps) {
  sweep::SweepGrid grid;
  grid.xi_values = sweep::make_axis(0.01, 10.0, xi_steps, sweep::Spacing::log);
  grid.tau_values = sweep::make_axis(0.0, 3.0, tau_steps, sweep::Spacing::linear);
  grid.method = method;
  return grid;
}

void run_heatmap(benchmark::State& state, const sweep::SweepGrid& grid) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = threads == 0 ? sweep::heatmap_serial(grid) : sweep::heatmap(grid, threads);
    benchmark::DoNotOptimize(result.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.xi_values.size() * grid.tau_values.size()));
}

void BM_HeatmapAnalytic(benchmark::State& state) {
  run_heatmap(state, heatmap_grid(sweep::Method::analytic, 81, 301));
}

void BM_HeatmapLindblad(benchmark::State& state) {
  run_heatmap(state, heatmap_grid(sweep::Method::lindblad, 16, 61));
}

void BM_MultimodeEvolve(benchmark::State& state) {
  const auto bath = multimode::sample_bath(ModelParams::from_xi(2.0), static_cast<std::size_t>(state.range(1)), 60.0);
  const int threads = static_cast<int>(state.range(0));
  const auto exec = threads == 0 ? multimode::Execution::serial : multimode::Execution::parallel;
  if (threads > 0) omp_set_num_threads(threads);
  for (auto _ : state) {
    auto states = multimode::evolve(bath, 0.5, 11, 0.0, exec);
    benchmark::DoNotOptimize(states.back().c_e);
  }
}

void BM_CmaxCurve(benchmark::State& state) {
  const auto xs = sweep::make_axis(0.01, 100.0, 200, sweep::Spacing::log);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto curve = threads == 0 ? sweep::cmax_curve_serial(xs) : sweep::cmax_curve(xs, threads);
    benchmark::DoNotOptimize(curve.points.data());
  }
}

}  // namespace

BENCHMARK(BM_HeatmapAnalytic)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HeatmapLindblad)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MultimodeEvolve)
    ->Args({0, 4001})
    ->Args({1, 4001})
    ->Args({2, 4001})
    ->Args({4, 4001})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_CmaxCurve)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
