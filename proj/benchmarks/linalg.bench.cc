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

#include "qcap/channel.h"
#include "qcap/linalg.h"
#include "qcap/random.h"

using namespace qcap;

static void BM_herm_eig(benchmark::State &state) {
    Rng rng(1);
    size_t d = static_cast<size_t>(state.range(0));
    CMatrix m = random_state(d, rng).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(herm_eig(m));
    }
}
BENCHMARK(BM_herm_eig)->Arg(2)->Arg(4)->Arg(9)->Arg(16)->Arg(36);

static void BM_matrix_entropy(benchmark::State &state) {
    Rng rng(2);
    CMatrix m = random_state(static_cast<size_t>(state.range(0)), rng).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_entropy(m));
    }
}
BENCHMARK(BM_matrix_entropy)->Arg(4)->Arg(16);

static void BM_partial_trace(benchmark::State &state) {
    Rng rng(3);
    size_t d = static_cast<size_t>(state.range(0));
    CMatrix m = random_state(d * d, rng).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(m, {d, d}, Subsystem::A));
    }
}
BENCHMARK(BM_partial_trace)->Arg(2)->Arg(4);

static void BM_complementary_apply(benchmark::State &state) {
    Rng rng(4);
    KrausChannel env = complementary_channel(random_channel(3, 3, 3, rng));
    CMatrix rho = random_state(3, rng).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(env.apply(rho));
    }
}
BENCHMARK(BM_complementary_apply);
