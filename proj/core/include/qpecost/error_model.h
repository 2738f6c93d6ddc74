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

#ifndef QPECOST_ERROR_MODEL_H
#define QPECOST_ERROR_MODEL_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qpecost/method_id.h"

namespace qpecost {

struct MolecularParams;
struct CostModelConfig;

/// Error sources a method can be charged for.
///   pea: phase estimation
///   hs:  Hamiltonian simulation (series truncation or Trotter)
///   h:   Hamiltonian coefficient discretisation
///   s:   rotation synthesis, shared out over all rotations
///   tay: truncated series inside reversible arithmetic
enum class ErrorSource { pea, hs, h, s, tay };
inline constexpr std::array<ErrorSource, 5> kAllSources{ErrorSource::pea, ErrorSource::hs, ErrorSource::h,
                                                        ErrorSource::s, ErrorSource::tay};
const char *source_name(ErrorSource s);

struct ErrorAllocation {
    double eps_pea = 0;
    double eps_hs = 0;
    double eps_h = 0;
    double eps_s = 0;
    double eps_tay = 0;

    double &operator[](ErrorSource s);
    double operator[](ErrorSource s) const;

    friend bool operator==(const ErrorAllocation &, const ErrorAllocation &) = default;
};

struct ErrorBudget {
    double total = 0.0015;  // Hartree
    std::array<std::optional<double>, 5> caps{};  // indexed by ErrorSource
};

struct OptimizerConfig {
    int trials = 1000;
    std::uint64_t seed = 0;
    int max_sweeps = 400;
    double initial_step = 0.5;
    double min_step = 1e-3;
    double dirichlet_concentration = 1.0;
    int threads = 0;  // 0: hardware concurrency
};

/// Sources read by the method's cost function. Always includes pea.
std::vector<ErrorSource> applicable_errors(MethodId m);

/// Total evolution time needed for phase estimation: 4.7 / eps_pea.
double phase_estimation_time(double eps_pea);

/// True if every listed source is strictly positive, respects its cap, and
/// the listed sources sum to at most budget.total.
bool is_feasible(const ErrorAllocation &a, const std::vector<ErrorSource> &sources, const ErrorBudget &budget);

/// Equal share of total * (1 - 1e-12) for each listed source.
ErrorAllocation uniform_allocation(const std::vector<ErrorSource> &sources, const ErrorBudget &budget);

struct OptimizeResult {
    ErrorAllocation best;
    double best_cost = 0;
    std::vector<double> trial_costs;  // one per trial; +inf if no feasible point was found
    std::vector<ErrorAllocation> trial_allocations;
    double median = 0;
};

/// Cost to minimise. May throw InfeasibleError, which counts as +inf.
using CostFunction = std::function<double(const ErrorAllocation &)>;

/// Random restarts plus pairwise-transfer local search over `sources`.
/// Each trial draws a Dirichlet split of the budget (resampled when it lands
/// on an infeasible point), then repeatedly moves a fraction `step` of one
/// component to another while that lowers the cost, halving `step` after a
/// sweep without improvement. Trials use independent generators seeded from
/// (seed, trial index), so results do not depend on thread count.
/// `cost` must be safe to call concurrently.
OptimizeResult optimize_allocation(const CostFunction &cost, const std::vector<ErrorSource> &sources,
                                   const ErrorBudget &budget, const OptimizerConfig &cfg);

/// Same, for one estimator on one molecule.
OptimizeResult optimize_allocation(MethodId method, const MolecularParams &params, const ErrorBudget &budget,
                                   const OptimizerConfig &cfg, const CostModelConfig &model);
OptimizeResult optimize_allocation(MethodId method, const MolecularParams &params, const ErrorBudget &budget,
                                   const OptimizerConfig &cfg);

/// Median with the even case averaged. Infinite entries sort last.
double median_of(std::vector<double> values);

}  // namespace qpecost

#endif
