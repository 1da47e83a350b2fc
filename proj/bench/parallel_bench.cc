// Copyright 2026 The infobargain Authors. All rights reserved.
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

// Serial reference against the OpenMP kernels: feasibility grids and
// experiment runs over the bundled grid.

#include <benchmark/benchmark.h>

#include "infobargain/harness.h"
#include "infobargain/reduction.h"
#include "infobargain/scenarios.h"

namespace {

using infobargain::FeasibilityMode;
using infobargain::FeasibilityOptions;

FeasibilityOptions FullProfile(double step) {
  FeasibilityOptions o;
  o.mode = FeasibilityMode::kFullProfile;
  o.resolution = step;
  return o;
}

void BM_FullProfileSerial(benchmark::State& state) {
  const auto task = infobargain::GradingTask();
  const auto opts = FullProfile(1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(infobargain::BuildFeasibilitySerial(task, opts));
  }
}
BENCHMARK(BM_FullProfileSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_FullProfileParallel(benchmark::State& state) {
  const auto task = infobargain::GradingTask();
  const auto opts = FullProfile(1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(infobargain::BuildFeasibility(task, opts));
  }
}
BENCHMARK(BM_FullProfileParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_FrontierSerial(benchmark::State& state) {
  const auto task = infobargain::GradingTask();
  FeasibilityOptions o;
  o.resolution = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(infobargain::BuildFeasibilitySerial(task, o));
  }
}
BENCHMARK(BM_FrontierSerial)->Unit(benchmark::kMillisecond);

void BM_FrontierParallel(benchmark::State& state) {
  const auto task = infobargain::GradingTask();
  FeasibilityOptions o;
  o.resolution = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(infobargain::BuildFeasibility(task, o));
  }
}
BENCHMARK(BM_FrontierParallel)->Unit(benchmark::kMillisecond);

// Long-term persuasion cell: realization sampling dominates.
void BM_ExperimentSerial(benchmark::State& state) {
  const auto config = infobargain::FindConfig(infobargain::BundledGrid(), 82);
  const auto factory = infobargain::ScriptedFactory();
  for (auto _ : state) {
    benchmark::DoNotOptimize(infobargain::RunExperimentSerial(config, factory));
  }
}
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);

void BM_ExperimentParallel(benchmark::State& state) {
  const auto config = infobargain::FindConfig(infobargain::BundledGrid(), 82);
  const auto factory = infobargain::ScriptedFactory();
  for (auto _ : state) {
    benchmark::DoNotOptimize(infobargain::RunExperiment(config, factory));
  }
}
BENCHMARK(BM_ExperimentParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
