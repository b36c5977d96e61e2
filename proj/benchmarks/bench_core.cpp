// Copyright 2026 The qcf Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <vector>

#include <benchmark/benchmark.h>

#include "qcf/evolution.hpp"
#include "qcf/homodyne.hpp"
#include "qcf/oracle.hpp"
#include "qcf/specfun.hpp"

namespace {

const qcf::BathParams kBath{1.0, 1.0};

void BM_Laguerre(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcf::specfun::laguerre(m, x));
        x = x < 60.0 ? x + 0.01 : 0.0;
    }
}
BENCHMARK(BM_Laguerre)->Arg(10)->Arg(100)->Arg(1000);

void BM_CfFockEvolved(benchmark::State &state) {
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcf::cf_fock_evolved(10, kBath, t, 6.03));
        t = t < 1.5 ? t + 1e-3 : 0.0;
    }
}
BENCHMARK(BM_CfFockEvolved);

void BM_FindKmax(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcf::find_kmax_fock(10, kBath));
    }
}
BENCHMARK(BM_FindKmax)->Unit(benchmark::kMillisecond);

void BM_LindbladRhs(benchmark::State &state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto rho = qcf::oracle::DensityMatrix::fock(dim, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcf::oracle::lindblad_rhs(rho.matrix(), kBath));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LindbladRhs)->RangeMultiplier(2)->Range(32, 256)->Complexity(benchmark::oNSquared);

void BM_OracleEvolveFock(benchmark::State &state) {
    const auto rho = qcf::oracle::build_initial_density(qcf::StateSpec::fock(10), 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcf::oracle::evolve(rho, kBath, 0.5, {}));
    }
}
BENCHMARK(BM_OracleEvolveFock)->Unit(benchmark::kMillisecond);

void BM_SamplerDraw(benchmark::State &state) {
    const qcf::homodyne::QuadratureSampler sampler(qcf::StateSpec::fock(10), std::nullopt,
                                                   0.0, 0.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.draw(n, seed++));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplerDraw)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_EstimateCf(benchmark::State &state) {
    qcf::homodyne::QuadratureDataset data =
        qcf::homodyne::sample_quadratures(qcf::StateSpec::fock(10), std::nullopt, 0.0, 0.0,
                                          100000, 1);
    std::vector<double> ks;
    for (int i = 1; i <= static_cast<int>(state.range(0)); ++i) {
        ks.push_back(0.25 * i);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcf::homodyne::estimate_cf(data, ks));
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_EstimateCf)->Arg(3)->Arg(32)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
