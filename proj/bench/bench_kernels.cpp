// Copyright 2026 The ueb Authors
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

#include "ueb/constructions.hpp"
#include "ueb/kernels.hpp"

namespace {

using namespace ueb;
using namespace ueb::kernels;

Subspace random_subspace(const QuditDims& dims, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CVector> cols;
    for (int i = 0; i < k; ++i) cols.push_back(random_unit(static_cast<Eigen::Index>(dims.total()), rng));
    return orthonormalize(cols, dims);
}

void BM_MultistartProduct(benchmark::State& state) {
    const QuditDims dims{4, 4};
    const Subspace s = random_subspace(dims, 9, 1);
    const ProductDefect f(Pencil(s, Bipartition(dims, 1)));
    SearchConfig cfg;
    cfg.starts = 64;
    const bool omp = state.range(0) != 0;
    for (auto _ : state) {
        auto r = omp ? multistart_minimize_omp(f, s.dim(), cfg) : multistart_minimize_serial(f, s.dim(), cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_MultistartProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MinorScan(benchmark::State& state) {
    const StateSet set = n_qubit_ueb(static_cast<int>(state.range(1)));
    const Subspace comp = orthogonal_complement(span_of(set));
    const Pencil pencil(comp, Bipartition(set.dims(), 1));
    const bool omp = state.range(0) != 0;
    for (auto _ : state) {
        auto r = omp ? scan_polarization_minors_omp(pencil) : scan_polarization_minors_serial(pencil);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_MinorScan)->Args({0, 6})->Args({1, 6})->Args({0, 8})->Args({1, 8})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
