// Copyright 2026 The cmap Authors
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


// Parallel kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>

#include "cmap/codingmap.h"
#include "cmap/stabilizer.h"

namespace {

using namespace cmap;

const char *const kCodes[] = {"bitflip3", "five-qubit", "steane", "shor"};

template <StokesChannel (*Kernel)(const CodingTables &, const StokesChannel &)>
void BM_GeneralMap(benchmark::State &state) {
    auto tables = make_tables(builtin_code(kCodes[state.range(0)]));
    std::mt19937_64 rng(1);
    auto t = random_cptp(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(tables, t));
    }
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK_TEMPLATE(BM_GeneralMap, general_map)->DenseRange(0, 3);
BENCHMARK_TEMPLATE(BM_GeneralMap, general_map_reference)->DenseRange(0, 3);

template <DistanceAndW (*Kernel)(std::size_t, const std::vector<PauliString> &)>
void BM_Distance(benchmark::State &state) {
    const auto &code = builtin_code(kCodes[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(code.num_qubits(), code.generators()));
    }
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK_TEMPLATE(BM_Distance, distance_and_w)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Distance, distance_and_w_reference)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

template <std::vector<PauliString> (*Kernel)(std::size_t, const std::vector<PauliString> &)>
void BM_AutoRecovery(benchmark::State &state) {
    const auto &code = builtin_code(kCodes[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(code.num_qubits(), code.generators()));
    }
    state.SetLabel(kCodes[state.range(0)]);
}
BENCHMARK_TEMPLATE(BM_AutoRecovery, auto_recovery)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_AutoRecovery, auto_recovery_reference)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
