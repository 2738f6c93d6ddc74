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

#ifndef QPECOST_QPE_METHODS_H
#define QPECOST_QPE_METHODS_H

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qpecost/error_model.h"
#include "qpecost/method_id.h"
#include "qpecost/molecule_params.h"
#include "qpecost/tcount.h"

namespace qpecost {

struct CostModelConfig {
    double plane_wave_multiplier = 100;
    double p_fail = 1e-2;  // target failure probability for the randomized product formulas
    double x_max_constant = 1;  // C in x_max = C ln(N t / eps_h) when no x_max is supplied
    double taylor_argument_bound = 1;  // largest argument fed to a truncated series
    double segment_inflation = std::numbers::e * std::numbers::ln2;  // walk-based methods
    int arithmetic_bits = 32;  // interaction-picture potential oracle
    double ci_tolerance = 1e-6;
    int ci_max_iterations = 100;
    std::int64_t nu_sum_exact_limit = 1000000;
};

struct Stage {
    std::string name;
    TCount cost;
};

/// Result of one estimator at one allocation. `stages` add up to `total`;
/// constants a method does not use are left at 0.
struct CostBreakdown {
    MethodId method{};
    TCount total;
    double r = 0;   // segments, walk steps or exponentials
    double K = 0;   // series truncation order
    double M = 0;   // discretisation constant
    double mu = 0;  // sample points or amplitude bits, per method
    double zeta = 0;
    double M0_bits = 0;
    double series_order = 0;
    double eps_ss = 0;
    double rotations = 0;  // synthesised rotations in the whole circuit
    std::vector<Stage> stages;
};

/// Closed-form sub-circuit costs shared by the estimators. Exposed so each
/// can be checked on its own.
namespace blocks {

/// Reversible evaluation of one contracted Gaussian orbital with d
/// primitives on n-bit registers, exponential truncated at order o.
TCount orbital_evaluation(int d, int n, int o);

/// Laplacian of one contracted orbital.
TCount orbital_laplacian(int d, int n);

/// Coulomb kernel 1/|r|: squared norm plus a Babylonian square root.
TCount coulomb_kernel(int n, int o);

/// Sample(w) pieces for Gaussian orbitals, `q` being the cost of the
/// orbital evaluations one term needs.
struct SampleCosts {
    TCount two_body;
    TCount kinetic;
    TCount external;
};
SampleCosts gaussian_samples(TCount q, TCount q_laplacian, int n, int o, int J);

/// 6N + 40 lg N + 16 lg(1/eps_ss) + 10 mu.
TCount low_depth_subprepare(std::int64_t N, double mu, double eps_ss);
/// 12N + 8 lg N.
TCount low_depth_select(std::int64_t N);
/// 6N + 12 lg N + 10 mu + 16 lg(1/eps_ss).
TCount linear_t_subprepare(std::int64_t N, double mu, double eps_ss);
/// 12N + 8 lg N - 14.
TCount linear_t_select(std::int64_t N);

/// Diagonal (p = q) coefficient sample for on-the-fly plane waves:
/// ceil(J (35o/2 + 63 + 2o / lg N) lg^2 N).
double diagonal_sample_cost(int J, int o, std::int64_t N);

/// Entries the low-rank QROAM reads: (2L + 1)(N^2/8 + N/4), rounded up.
std::int64_t low_rank_entries(std::int64_t L, std::int64_t N);

/// Leading amplitude-register width ceil(log2(2 sqrt(2) lambda / dE)).
double amplitude_leading_bits(double lambda, double dE);

/// Interaction-picture segments ceil(4.7 ||T|| / (eps_pea ln 2)).
double interaction_picture_segments(double norm_T, double eps_pea);

}  // namespace blocks

/// Smallest o >= 1 with B^o / o! <= eps_tay.
int series_order_for(double eps_tay, double argument_bound);

/// Truncation orders for Taylor and Dyson series at x = 2r/eps_hs.
int taylor_truncation_order(double x);
int dyson_truncation_order(double x);

/// One method bound to one molecule. Plane-wave quantities and field checks
/// are done once at construction; `evaluate` is pure and thread-safe.
class Estimator {
   public:
    Estimator(MethodId method, const MolecularParams &params, const CostModelConfig &cfg = {});

    /// Full estimate. eps_ss is resolved by one fixed-point pass: count the
    /// rotations at eps_ss = eps_s, then re-cost at eps_s / rotations.
    CostBreakdown evaluate(const ErrorAllocation &alloc) const;

    /// Estimate at a fixed per-rotation precision (no fixed-point pass).
    CostBreakdown evaluate_at(const ErrorAllocation &alloc, double eps_ss) const;

    MethodId method() const {
        return method_;
    }
    const MolecularParams &params() const {
        return params_;
    }
    const CostModelConfig &config() const {
        return cfg_;
    }

    // Plane-wave derived quantities (0 for Gaussian methods).
    std::int64_t plane_wave_count() const {
        return n_pw_;
    }
    double nu_sum() const {
        return nu_sum_;
    }
    NormBounds norms() const {
        return norms_;
    }
    double plane_wave_lambda_value() const {
        return lambda_pw_;
    }
    double lambda_prime() const {
        return lambda_prime_;
    }

   private:
    MethodId method_;
    MolecularParams params_;
    CostModelConfig cfg_;
    std::int64_t n_pw_ = 0;
    double nu_sum_ = 0;
    NormBounds norms_{};
    double lambda_pw_ = 0;
    double lambda_prime_ = 0;
    double ci_gamma_ = 0;
};

CostBreakdown estimate(MethodId method, const MolecularParams &params, const ErrorAllocation &alloc,
                       const CostModelConfig &cfg = {});

CostBreakdown qdrift_cost(const MolecularParams &p, const ErrorAllocation &a, const CostModelConfig &cfg = {});
CostBreakdown rand_hamiltonian_cost(const MolecularParams &p, const ErrorAllocation &a,
                                    const CostModelConfig &cfg = {});
CostBreakdown taylor_naive_cost(const MolecularParams &p, const ErrorAllocation &a, const CostModelConfig &cfg = {});
CostBreakdown taylor_on_the_fly_cost(const MolecularParams &p, const ErrorAllocation &a,
                                     const CostModelConfig &cfg = {});
CostBreakdown configuration_interaction_cost(const MolecularParams &p, const ErrorAllocation &a,
                                             const CostModelConfig &cfg = {});
CostBreakdown low_depth_trotter_cost(const MolecularParams &p, const ErrorAllocation &a,
                                     const CostModelConfig &cfg = {});
CostBreakdown low_depth_taylor_naive_cost(const MolecularParams &p, const ErrorAllocation &a,
                                          const CostModelConfig &cfg = {});
CostBreakdown low_depth_taylor_on_the_fly_cost(const MolecularParams &p, const ErrorAllocation &a,
                                               const CostModelConfig &cfg = {});
CostBreakdown linear_t_cost(const MolecularParams &p, const ErrorAllocation &a, const CostModelConfig &cfg = {});
CostBreakdown sparsity_low_rank_cost(const MolecularParams &p, const ErrorAllocation &a,
                                     const CostModelConfig &cfg = {});
CostBreakdown interaction_picture_cost(const MolecularParams &p, const ErrorAllocation &a,
                                       const CostModelConfig &cfg = {});

}  // namespace qpecost

#endif
