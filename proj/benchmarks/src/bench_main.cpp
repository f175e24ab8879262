// Copyright 2026 The laurent-duality Authors
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

#include <random>

#include "ldual/crossed.hpp"
#include "ldual/dualities.hpp"
#include "ldual/io.hpp"
#include "ldual/syzygy.hpp"
#include "ldual/zalg.hpp"
#include "random_modules.hpp"

using namespace ldual;

namespace {

const std::string kData = LDUAL_BENCH_DATA_DIR;

FinLengthModule sample(std::size_t rank, std::size_t dim) {
    std::mt19937 rng(static_cast<unsigned>(97 * rank + dim));
    return cli::random_module(Field::rational(), rank, dim, rng);
}

void BM_KernelOfKoszulDifferential(benchmark::State& state) {
    const FreeComplex k = koszul_resolution(sample(static_cast<std::size_t>(state.range(0)), 2));
    const LaurentMatrix& last = k.differentials.back();
    for (auto _ : state) benchmark::DoNotOptimize(kernel_gens(last));
}
BENCHMARK(BM_KernelOfKoszulDifferential)->Arg(1)->Arg(2)->Arg(3);

void BM_CohomologyOfDualKoszul(benchmark::State& state) {
    const std::size_t rank = static_cast<std::size_t>(state.range(0));
    const FreeComplex dual = koszul_resolution(sample(rank, static_cast<std::size_t>(state.range(1)))).dual();
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_at(dual, 0));
}
BENCHMARK(BM_CohomologyOfDualKoszul)->Args({1, 4})->Args({1, 6})->Args({2, 3});

void BM_CohomologySmith(benchmark::State& state) {
    const FreeComplex dual = koszul_resolution(sample(1, static_cast<std::size_t>(state.range(0)))).dual();
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_at_snf(dual, 0));
}
BENCHMARK(BM_CohomologySmith)->Arg(4)->Arg(6);

void BM_ExtFinite(benchmark::State& state) {
    const std::size_t rank = static_cast<std::size_t>(state.range(0));
    const std::size_t dim = static_cast<std::size_t>(state.range(1));
    const FinLengthModule m = sample(rank, dim);
    for (auto _ : state) benchmark::DoNotOptimize(ext_finite(m, m));
}
BENCHMARK(BM_ExtFinite)->Args({1, 4})->Args({2, 3})->Args({3, 2});

void BM_FsgProbeFinite(benchmark::State& state) {
    const ZFiniteAlgebra a = load_zalg_file(kData + "/m2.alg").algebra;
    for (auto _ : state) benchmark::DoNotOptimize(fsg_probe(a));
}
BENCHMARK(BM_FsgProbeFinite);

void BM_FsgProbeHecke(benchmark::State& state) {
    const ZFiniteAlgebra a = load_zalg_file(kData + "/hecke_a1.alg").algebra;
    const int box = static_cast<int>(state.range(0));
    const std::size_t threads = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(fsg_probe(a, box, threads));
}
BENCHMARK(BM_FsgProbeHecke)->Args({1, 1})->Args({2, 1})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_CrossedTraceCertificate(benchmark::State& state) {
    const CrossedAlgebra r = load_crossed_file(kData + "/z3_cross.alg").algebra;
    for (auto _ : state) benchmark::DoNotOptimize(trace_fsg_certificate(r));
}
BENCHMARK(BM_CrossedTraceCertificate);

}  // namespace

BENCHMARK_MAIN();
