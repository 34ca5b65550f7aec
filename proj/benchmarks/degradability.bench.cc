// Copyright 2026 The qcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "benchmark/benchmark.h"

#include "qcap/degradability.h"
#include "qcap/zoo.h"

using namespace qcap;

static void BM_is_degradable_ad(benchmark::State &state) {
    KrausChannel n = amplitude_damping(0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_degradable(n).residual);
    }
}
BENCHMARK(BM_is_degradable_ad)->Unit(benchmark::kMillisecond);

// Infeasible instance: runs until the stagnation rule stops it.
static void BM_is_degradable_infeasible(benchmark::State &state) {
    KrausChannel n = amplitude_damping(0.75);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_degradable(n).residual);
    }
}
BENCHMARK(BM_is_degradable_infeasible)->Unit(benchmark::kMillisecond);

static void BM_is_degradable_tiles(benchmark::State &state) {
    KrausChannel n = tiles_complement();
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_degradable(n).residual);
    }
}
BENCHMARK(BM_is_degradable_tiles)->Unit(benchmark::kMillisecond);
