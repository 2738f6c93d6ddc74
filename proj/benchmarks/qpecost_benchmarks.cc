// Copyright 2026 The qpe-cost Authors
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


#include <filesystem>

#include "benchmark/benchmark.h"
#include "qpecost/cost_primitives.h"
#include "qpecost/error_model.h"
#include "qpecost/molecule_params.h"
#include "qpecost/qpe_methods.h"

using namespace qpecost;

namespace {

MolecularParams fixture(const char *file) {
    return load_params((std::filesystem::path(QPECOST_FIXTURES_DIR) / file).string());
}

void BM_qroam_optimal_k(benchmark::State &state) {
    std::int64_t d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qroam_optimal_k(d, 40, QroamMode::compute));
    }
}
BENCHMARK(BM_qroam_optimal_k)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 24);

void BM_rotation_synthesis(benchmark::State &state) {
    double eps = 1e-12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rotation_synthesis_cost(eps, RotationKind::rz, Control::single));
    }
}
BENCHMARK(BM_rotation_synthesis);

void BM_lattice_sum(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nu_inverse_square_sum(state.range(0)));
    }
}
BENCHMARK(BM_lattice_sum)->Arg(512)->Arg(4096)->Arg(32768);

void BM_estimate(benchmark::State &state) {
    auto method = kAllMethods[static_cast<std::size_t>(state.range(0))];
    auto params = fixture("h2o_6-31G.json");
    Estimator est(method, params);
    auto alloc = uniform_allocation(applicable_errors(method), ErrorBudget{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(est.evaluate(alloc));
    }
    state.SetLabel(std::string(method_name(method)));
}
BENCHMARK(BM_estimate)->DenseRange(0, 10);

void BM_optimize_allocation(benchmark::State &state) {
    auto params = fixture("h2o_6-31G.json");
    OptimizerConfig cfg;
    cfg.trials = static_cast<int>(state.range(0));
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_allocation(MethodId::sparsity_low_rank, params, ErrorBudget{}, cfg).median);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_optimize_allocation)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
