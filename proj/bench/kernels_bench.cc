// Copyright 2026 The dynw Authors
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

// Serial reference kernels against their OpenMP versions. The second
// benchmark argument selects the mode: 0 serial, 1 parallel with one worker
// per hardware thread.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "dynw/bivariate.h"
#include "dynw/classifier.h"
#include "dynw/curve_model.h"
#include "dynw/dynatomic.h"
#include "dynw/enumerate.h"
#include "dynw/ff_lab.h"
#include "dynw/parallel.h"

namespace dynw {
namespace {

Exec ModeOf(const benchmark::State& state) {
  if (state.range(1) == 0) return Exec::kSerial;
  SetJobs(omp_get_num_procs());
  return Exec::kParallel;
}

void BM_MultiplyIterates(benchmark::State& state) {
  const Exec exec = ModeOf(state);
  const IntBiPoly a = IterateFcDense(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, a, exec));
}
BENCHMARK(BM_MultiplyIterates)->ArgsProduct({{7, 9}, {0, 1}});

void BM_DivideExact(benchmark::State& state) {
  const Exec exec = ModeOf(state);
  const int n = static_cast<int>(state.range(0));
  const IntBiPoly phi = DynatomicDense(n);
  const IntBiPoly other = DynatomicDense(n - 1);
  const IntBiPoly product = Multiply(phi, other, exec);
  for (auto _ : state) benchmark::DoNotOptimize(DivideExact(product, other, exec));
}
BENCHMARK(BM_DivideExact)->ArgsProduct({{7, 8}, {0, 1}});

void BM_EnumerateGeneric(benchmark::State& state) {
  const Exec exec = ModeOf(state);
  const CycleStructure sigma = CycleStructure::Parse("2,1,1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateGeneric(static_cast<int>(state.range(0)), sigma, exec));
  }
}
BENCHMARK(BM_EnumerateGeneric)->ArgsProduct({{10, 12}, {0, 1}});

void BM_CountPointsFullModel(benchmark::State& state) {
  const Exec exec = ModeOf(state);
  const CurveModel model = FullModel(MinimalPortrait(CycleStructure::Parse("3,3")));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountPoints(model, static_cast<uint64_t>(state.range(0)), 1, exec));
  }
}
BENCHMARK(BM_CountPointsFullModel)->ArgsProduct({{13, 31}, {0, 1}});

void BM_MaxPeriodMod(benchmark::State& state) {
  const Exec exec = ModeOf(state);
  const auto ctx = FFContext::Create(static_cast<uint64_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(MaxPeriodMod(ctx, exec));
}
BENCHMARK(BM_MaxPeriodMod)->ArgsProduct({{257, 1021}, {0, 1}});

void BM_Sweep(benchmark::State& state) {
  const Exec exec = ModeOf(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Sweep(static_cast<int>(state.range(0)), nullptr, exec));
  }
}
BENCHMARK(BM_Sweep)->ArgsProduct({{50, 200}, {0, 1}});

}  // namespace
}  // namespace dynw

BENCHMARK_MAIN();
