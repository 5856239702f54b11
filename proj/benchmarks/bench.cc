// Copyright 2026 The PulseForge Authors
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

#include <benchmark/benchmark.h>

#include <array>

#include "pulseforge/analysis.h"
#include "pulseforge/families.h"
#include "pulseforge/solver.h"
#include "pulseforge/su2.h"

using namespace pulseforge;

static void BM_pulse_unitary(benchmark::State &state) {
    Pulse p(2.1, 0.4);
    OreMagnitude f(0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pulse_unitary(p, f));
    }
}
BENCHMARK(BM_pulse_unitary);

static void BM_build_sequence(benchmark::State &state) {
    TargetRotation target(kPi / 2, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_sequence(target, 0.25, WindingNumbers(1, 0, 0)));
    }
}
BENCHMARK(BM_build_sequence);

static void BM_oracle_solve(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_solve(0.3, 0.2, Parity::kOdd));
    }
}
BENCHMARK(BM_oracle_solve);

static void BM_gate_infidelity(benchmark::State &state) {
    CompositeSequence seq = build_sequence(TargetRotation(kPi, 0.0), 0.4);
    Su2Matrix ideal = target_unitary(seq.target);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gate_infidelity(ideal, sequence_unitary(seq.pulses, OreMagnitude(0.1))));
    }
}
BENCHMARK(BM_gate_infidelity);

static void BM_infidelity_sweep(benchmark::State &state) {
    int points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(infidelity_sweep(kPi, WindingNumbers(1, 0, 0), 0.1, points));
    }
    state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_infidelity_sweep)->Arg(101)->Arg(1001);

static void BM_scaling_exponent(benchmark::State &state) {
    FamilySequence seq = fundamental_corpse(TargetRotation(kPi, 0.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scaling_exponent(seq, 0.03, 0.1));
    }
}
BENCHMARK(BM_scaling_exponent);

BENCHMARK_MAIN();
