// Copyright 2026 The ginirate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "ginirate/ginibre_exact.hpp"
#include "ginirate/parallel.hpp"
#include "ginirate/sampler.hpp"

namespace {

using namespace ginirate;

std::vector<double> y_grid() {
  std::vector<double> ys;
  for (double y = -3.0; y <= 12.0; y += 0.01) ys.push_back(y);
  return ys;
}

void BM_CdfGridSerial(benchmark::State& state) {
  const GinibreLaw law{ScalingParams(state.range(0))};
  const auto ys = y_grid();
  for (auto _ : state) benchmark::DoNotOptimize(cdf_y_grid_serial(law, ys));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ys.size()));
}

void BM_CdfGridParallel(benchmark::State& state) {
  const GinibreLaw law{ScalingParams(state.range(0))};
  const auto ys = y_grid();
  for (auto _ : state) benchmark::DoNotOptimize(cdf_y_grid(law, ys, default_workers()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ys.size()));
}

void BM_RadiiSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_radii_serial(state.range(0), EntryDistribution::kComplexGaussian, 16, 1));
  }
  state.SetItemsProcessed(state.iterations() * 16);
}

void BM_RadiiParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_radii(state.range(0), EntryDistribution::kComplexGaussian, 16, 1, default_workers()));
  }
  state.SetItemsProcessed(state.iterations() * 16);
}

void BM_LogCdfRecurrence(benchmark::State& state) {
  const ScalingParams p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ginibre_log_cdf_radius(p.n(), p.center()));
}

void BM_LogCdfPerFactor(benchmark::State& state) {
  const ScalingParams p(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ginibre_log_cdf_radius_reference(p.n(), p.center()));
}

}  // namespace

BENCHMARK(BM_CdfGridSerial)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CdfGridParallel)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiiSerial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadiiParallel)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogCdfRecurrence)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LogCdfPerFactor)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
