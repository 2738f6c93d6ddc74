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

#ifndef QPECOST_COST_PRIMITIVES_H
#define QPECOST_COST_PRIMITIVES_H

#include <cstdint>

#include "qpecost/tcount.h"

// T-gate costs of the fault-tolerant building blocks shared by every
// estimator. All functions are pure. Additive O(1) constants are dropped, and
// one Toffoli counts as 4 T gates throughout.

namespace qpecost {

// Arithmetic on n-bit registers.
TCount add_cost(int n);      // 4n
TCount mult_cost(int n);     // 21n^2
TCount div_cost(int n);      // 14n^2 + 7n
TCount compare_cost(int n);  // 8n (2n Toffolis)

/// NOT with m controls. 16(m-2) for m >= 3; a Toffoli (4) for m = 2; a CNOT
/// (Clifford, 0) for m = 1. m = 0 is rejected.
TCount multi_controlled_not_cost(int m);

enum class RotationKind { su2, rz };
enum class Control { none, single, general };

/// Clifford+T synthesis of one rotation to precision eps_ss in (0, 1).
/// Base cost 10 + 12*ceil(log2(1/eps)) for su2, 10 + 4*ceil(log2(1/eps)) for
/// rz; a single control doubles it, a general controlled rotation triples it.
TCount rotation_synthesis_cost(double eps_ss, RotationKind kind, Control control = Control::none);

/// Rotations needed to prepare an arbitrary n-qubit state: 2^(n+1) - 2.
/// Returned as a double because n grows with log2(N^4).
double arbitrary_state_synthesis_rotations(int n);

/// Unary-iteration read-only memory over L >= 2 entries: 4L - 4.
TCount qrom_cost(std::int64_t L);

/// Toffoli counts of the ancilla-traded read-only memory. k must be a power of
/// two in [1, d].
struct QroamToffolis {
    double compute;    // ceil(d/k) + M(k-1)
    double uncompute;  // ceil(d/k) + k
};
QroamToffolis qroam_cost(std::int64_t d, std::int64_t M, std::int64_t k);

enum class QroamMode { compute, uncompute };

/// Power of two in [1, d] minimising the chosen qroam_cost side. Ties go to
/// the smaller k.
std::int64_t qroam_optimal_k(std::int64_t d, std::int64_t M, QroamMode mode);

/// Uniform superposition over the first L >= 2 basis states:
/// 8*ceil(log2 L) plus two rz rotations.
TCount uniform_superposition_cost(std::int64_t L, double eps_ss);

/// Same, for state counts too large for any machine integer. Takes log2(L)
/// and applies the ceiling itself.
TCount uniform_superposition_cost_log2(double log2_L, double eps_ss);

/// Fermionic FFT over N modes (N a power of two, N >= 2):
/// (N/2) log2(N/2) rz rotations plus (N/2) log2(N) F2 gates of 2 T each.
TCount fermionic_fft_cost(std::int64_t N, double eps_ss);

/// Rotations inside fermionic_fft_cost, for precision bookkeeping.
double fermionic_fft_rotations(std::int64_t N);

enum class SeriesKind { exp, sqrt_babylonian, cosine_cordic };

/// Reversible evaluation of a truncated series of order o on n-bit registers.
///   exp:             (o-1) mult + (o-1) div + o add
///   sqrt_babylonian: o * (add + div)
///   cosine_cordic:   1 div + 2o add
/// Shifts and multiplications by powers of two are free.
TCount taylor_series_eval_cost(int order, int n, SeriesKind kind);

/// ceil(log2(x)) for integers x >= 1, computed without floating point.
int ceil_log2(std::uint64_t x);

/// ceil(log2(1/eps)) for a precision in (0, 1).
int precision_bits(double eps);

}  // namespace qpecost

#endif
