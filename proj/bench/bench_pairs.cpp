// Copyright 2026 The Authors.
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

// Pair-training kernels on one fixed coverage problem: the serial reference
// (one LP per pair), the staircase walk, and the OpenMP binary search.

#include <benchmark/benchmark.h>

#include "cmpl/comparator.hpp"
#include "cmpl/setfn.hpp"

namespace {

using namespace cmpl;

void run(benchmark::State& state, PairKernel kernel) {
  const int n = 16;
  const SetFunctionPtr f = gen_coverage(n, 50, 0.2, 11);
  const FeatureMap map = FeatureMap::characteristic(n);
  const SampleSource source = product_source(n, 0.2);
  TrainConfig config;
  config.mode = Multiplicative{4.0};
  config.landmark_count_override = static_cast<int>(state.range(0));
  config.train_set_size_override = 4000;
  config.seed = 5;
  config.kernel = kernel;
  std::size_t lps = 0;
  for (auto _ : state) {
    ComparisonOracle oracle(f);
    TrainResult r = train_multiplicative(oracle, map, config, source);
    lps = r.lp_count;
    benchmark::DoNotOptimize(r.comparator.pairs.data());
  }
  state.counters["lps"] = static_cast<double>(lps);
}

void BM_Serial(benchmark::State& s) { run(s, PairKernel::kSerialReference); }
void BM_Staircase(benchmark::State& s) { run(s, PairKernel::kStaircase); }
void BM_Parallel(benchmark::State& s) { run(s, PairKernel::kParallel); }

BENCHMARK(BM_Serial)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Staircase)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
