/* Copyright 2026 The hypzeta Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <benchmark/benchmark.h>

#include "hypzeta/euler_product.hpp"
#include "hypzeta/length_spectrum.hpp"
#include "hypzeta/special_functions.hpp"
#include "hypzeta/zeta_factors.hpp"

using namespace hypzeta;

static void BM_LogGamma(benchmark::State& state) {
    Complex s(0.3, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma(s));
        s += Complex(1e-9, 0.0);
    }
}
BENCHMARK(BM_LogGamma);

static void BM_LogBarnesGamma2(benchmark::State& state) {
    EvalOptions opts;
    opts.gamma2_cutoff = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(log_barnes_gamma2(Complex(0.3, 2.0), opts));
}
BENCHMARK(BM_LogBarnesGamma2)->Arg(1000)->Arg(10000);

static void BM_Kappa(benchmark::State& state) {
    const Signature sig = Signature::make(0, 1, {2, 3});
    const ScatteringModel model = ScatteringModel::modular();
    for (auto _ : state) benchmark::DoNotOptimize(kappa(sig, model, Complex(0.3, 0.2)));
}
BENCHMARK(BM_Kappa);

static void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(state.range(0)).class_count());
}
BENCHMARK(BM_Enumerate)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SelbergZ(benchmark::State& state) {
    const LengthSpectrum spectrum = enumerate(state.range(0));
    EvalOptions opts;
    opts.euler_max_trace = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(selberg_Z(spectrum, Complex(2.0, 1.0), opts).value);
}
BENCHMARK(BM_SelbergZ)->Arg(40)->Arg(200);

BENCHMARK_MAIN();
