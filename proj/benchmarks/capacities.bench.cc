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

#include "qcap/capacities.h"
#include "qcap/zoo.h"

using namespace qcap;

static void BM_maximize_coherent_information_ad(benchmark::State &state) {
    KrausChannel n = amplitude_damping(0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_coherent_information(n).value);
    }
}
BENCHMARK(BM_maximize_coherent_information_ad)->Unit(benchmark::kMillisecond);

static void BM_maximize_private_information_ad(benchmark::State &state) {
    KrausChannel n = amplitude_damping(0.25);
    StateOptimum q = maximize_coherent_information(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_private_information(n, {}, q).value);
    }
}
BENCHMARK(BM_maximize_private_information_ad)->Unit(benchmark::kMillisecond);

static void BM_q1_two_copies(benchmark::State &state) {
    KrausChannel n = dephasing(0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(q1_multicopy(n, 2));
    }
}
BENCHMARK(BM_q1_two_copies)->Unit(benchmark::kMillisecond);

static void BM_compute_delta(benchmark::State &state) {
    KrausChannel n = amplitude_damping(0.25);
    WiretapChannel deg = WiretapChannel::of(n);
    WiretapChannel pd = WiretapChannel::degraded(n, depolarizing(2, 0.5));
    OptimizerConfig cfg;
    cfg.restarts = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_delta(deg, pd, cfg).delta_holevo);
    }
}
BENCHMARK(BM_compute_delta)->Unit(benchmark::kMillisecond);
