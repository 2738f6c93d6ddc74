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

#include "qpecost/error_model.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "qpecost/errors.h"
#include "qpecost/qpe_methods.h"

namespace qpecost {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Keeps the sum strictly under the budget after floating-point rounding.
constexpr double kBudgetShrink = 1.0 - 1e-12;

double safe_cost(const CostFunction &cost, const ErrorAllocation &a) {
    try {
        double v = cost(a);
        return std::isnan(v) ? kInf : v;
    } catch (const InfeasibleError &) {
        return kInf;
    }
}

struct Trial {
    ErrorAllocation allocation;
    double cost = kInf;
};

Trial run_trial(const CostFunction &cost, const std::vector<ErrorSource> &sources, const ErrorBudget &budget,
                const OptimizerConfig &cfg, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::gamma_distribution<double> gamma(cfg.dirichlet_concentration, 1.0);
    const double target = budget.total * kBudgetShrink;

    auto check = [&](const ErrorAllocation &a) {
        if (!is_feasible(a, sources, budget)) {
            throw std::logic_error("optimizer produced an allocation outside the budget");
        }
    };

    Trial best;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> draw(sources.size());
        double sum = 0;
        for (auto &g : draw) {
            do {
                g = gamma(rng);
            } while (!(g > 0.0));
            sum += g;
        }
        ErrorAllocation a;
        for (std::size_t i = 0; i < sources.size(); ++i) {
            a[sources[i]] = target * (draw[i] / sum);
        }
        if (!is_feasible(a, sources, budget)) {
            continue;
        }
        double c = safe_cost(cost, a);
        if (std::isfinite(c)) {
            best = {a, c};
            break;
        }
    }
    if (!std::isfinite(best.cost)) {
        return best;
    }
    check(best.allocation);

    double step = cfg.initial_step;
    for (int sweep = 0; sweep < cfg.max_sweeps && step >= cfg.min_step; ++sweep) {
        bool improved = false;
        for (auto from : sources) {
            for (auto to : sources) {
                if (from == to) {
                    continue;
                }
                ErrorAllocation cand = best.allocation;
                double moved = cand[from] * step;
                cand[from] -= moved;
                cand[to] += moved;
                if (!is_feasible(cand, sources, budget)) {
                    continue;
                }
                double c = safe_cost(cost, cand);
                if (c < best.cost) {
                    best = {cand, c};
                    improved = true;
                }
            }
        }
        if (!improved) {
            step /= 2.0;
        }
    }
    check(best.allocation);
    return best;
}

}  // namespace

const char *source_name(ErrorSource s) {
    switch (s) {
        case ErrorSource::pea:
            return "eps_pea";
        case ErrorSource::hs:
            return "eps_hs";
        case ErrorSource::h:
            return "eps_h";
        case ErrorSource::s:
            return "eps_s";
        case ErrorSource::tay:
            return "eps_tay";
    }
    return "?";
}

double &ErrorAllocation::operator[](ErrorSource s) {
    switch (s) {
        case ErrorSource::pea:
            return eps_pea;
        case ErrorSource::hs:
            return eps_hs;
        case ErrorSource::h:
            return eps_h;
        case ErrorSource::s:
            return eps_s;
        case ErrorSource::tay:
            return eps_tay;
    }
    return eps_pea;
}

double ErrorAllocation::operator[](ErrorSource s) const {
    return const_cast<ErrorAllocation &>(*this)[s];
}

std::vector<ErrorSource> applicable_errors(MethodId m) {
    using E = ErrorSource;
    switch (m) {
        case MethodId::qdrift:
        case MethodId::rand_hamiltonian:
        case MethodId::taylor_naive:
        case MethodId::low_depth_trotter:
        case MethodId::low_depth_taylor_naive:
        case MethodId::interaction_picture:
            return {E::pea, E::hs, E::s};
        case MethodId::taylor_on_the_fly:
        case MethodId::configuration_interaction:
        case MethodId::low_depth_taylor_on_the_fly:
            return {E::pea, E::hs, E::h, E::s, E::tay};
        case MethodId::linear_t:
        case MethodId::sparsity_low_rank:
            return {E::pea, E::s};
    }
    throw InputError("unknown method");
}

double phase_estimation_time(double eps_pea) {
    if (!(eps_pea > 0.0)) {
        throw InputError("eps_pea must be > 0");
    }
    return 4.7 / eps_pea;
}

bool is_feasible(const ErrorAllocation &a, const std::vector<ErrorSource> &sources, const ErrorBudget &budget) {
    double sum = 0;
    for (auto s : sources) {
        double v = a[s];
        if (!(v > 0.0)) {
            return false;
        }
        const auto &cap = budget.caps[static_cast<std::size_t>(s)];
        if (cap && v > *cap) {
            return false;
        }
        sum += v;
    }
    return sum <= budget.total;
}

ErrorAllocation uniform_allocation(const std::vector<ErrorSource> &sources, const ErrorBudget &budget) {
    ErrorAllocation a;
    for (auto s : sources) {
        a[s] = budget.total * kBudgetShrink / static_cast<double>(sources.size());
    }
    return a;
}

double median_of(std::vector<double> values) {
    if (values.empty()) {
        throw InputError("median of an empty set");
    }
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) {
        return values[n / 2];
    }
    double lo = values[n / 2 - 1];
    double hi = values[n / 2];
    if (std::isinf(hi)) {
        return hi;
    }
    return lo + (hi - lo) / 2.0;
}

OptimizeResult optimize_allocation(const CostFunction &cost, const std::vector<ErrorSource> &sources,
                                   const ErrorBudget &budget, const OptimizerConfig &cfg) {
    if (!(budget.total > 0.0)) {
        throw InfeasibleError("infeasible budget: total must be > 0");
    }
    if (cfg.trials < 1) {
        throw InputError("trials must be >= 1");
    }
    if (sources.empty()) {
        throw InputError("no error sources to allocate");
    }

    const auto trials = static_cast<std::size_t>(cfg.trials);
    std::vector<Trial> results(trials);
    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));

    auto worker = [&](std::size_t begin) {
        for (std::size_t i = begin; i < trials; i += threads) {
            results[i] = run_trial(cost, sources, budget, cfg, i);
        }
    };
    std::vector<std::future<void>> jobs;
    for (unsigned w = 1; w < threads; ++w) {
        jobs.push_back(std::async(std::launch::async, worker, w));
    }
    worker(0);
    for (auto &j : jobs) {
        j.get();
    }

    OptimizeResult out;
    out.best_cost = kInf;
    out.trial_costs.reserve(trials);
    out.trial_allocations.reserve(trials);
    for (const auto &r : results) {
        out.trial_costs.push_back(r.cost);
        out.trial_allocations.push_back(r.allocation);
        if (r.cost < out.best_cost) {
            out.best_cost = r.cost;
            out.best = r.allocation;
        }
    }
    out.median = median_of(out.trial_costs);
    if (!std::isfinite(out.median)) {
        throw InfeasibleError("no finite estimate: most trials found no feasible allocation");
    }
    return out;
}

OptimizeResult optimize_allocation(MethodId method, const MolecularParams &params, const ErrorBudget &budget,
                                   const OptimizerConfig &cfg, const CostModelConfig &model) {
    if (!(budget.total > 0.0)) {
        throw InfeasibleError("infeasible budget: total must be > 0");
    }
    Estimator est(method, params, model);
    auto cost = [&est](const ErrorAllocation &a) { return est.evaluate(a).total.value(); };
    return optimize_allocation(cost, applicable_errors(method), budget, cfg);
}

OptimizeResult optimize_allocation(MethodId method, const MolecularParams &params, const ErrorBudget &budget,
                                   const OptimizerConfig &cfg) {
    return optimize_allocation(method, params, budget, cfg, CostModelConfig{});
}

}  // namespace qpecost
