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

#include "qpecost/cost_primitives.h"

#include <bit>
#include <cmath>
#include <string>

#include "qpecost/errors.h"

namespace qpecost {

namespace {

void require_width(int n, const char *what) {
    if (n < 1) {
        throw InputError(std::string(what) + ": register width must be >= 1, got " + std::to_string(n));
    }
}

void require_precision(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InputError("rotation precision must lie in (0, 1), got " + std::to_string(eps));
    }
}

bool is_power_of_two(std::int64_t x) {
    return x > 0 && std::has_single_bit(static_cast<std::uint64_t>(x));
}

double ceil_div(std::int64_t a, std::int64_t b) {
    return static_cast<double>((a + b - 1) / b);
}

}  // namespace

int ceil_log2(std::uint64_t x) {
    if (x == 0) {
        throw InputError("ceil_log2 of 0");
    }
    return x == 1 ? 0 : std::bit_width(x - 1);
}

int precision_bits(double eps) {
    require_precision(eps);
    return static_cast<int>(std::ceil(std::log2(1.0 / eps)));
}

TCount add_cost(int n) {
    require_width(n, "add");
    return TCount(4.0 * n);
}

TCount mult_cost(int n) {
    require_width(n, "mult");
    return TCount(21.0 * n * n);
}

TCount div_cost(int n) {
    require_width(n, "div");
    return TCount(14.0 * n * n + 7.0 * n);
}

TCount compare_cost(int n) {
    require_width(n, "compare");
    return TCount(8.0 * n);
}

TCount multi_controlled_not_cost(int m) {
    if (m < 1) {
        throw InputError("multi-controlled NOT needs at least one control, got " + std::to_string(m));
    }
    if (m == 1) {
        return TCount(0);
    }
    if (m == 2) {
        return TCount(4);
    }
    return TCount(16.0 * (m - 2));
}

TCount rotation_synthesis_cost(double eps_ss, RotationKind kind, Control control) {
    double bits = precision_bits(eps_ss);
    double base = kind == RotationKind::su2 ? 10.0 + 12.0 * bits : 10.0 + 4.0 * bits;
    switch (control) {
        case Control::none:
            return TCount(base);
        case Control::single:
            return TCount(2.0 * base);
        case Control::general:
            return TCount(3.0 * base);
    }
    return TCount(base);
}

double arbitrary_state_synthesis_rotations(int n) {
    if (n < 1) {
        throw InputError("state synthesis needs at least one qubit");
    }
    return std::ldexp(1.0, n + 1) - 2.0;
}

TCount qrom_cost(std::int64_t L) {
    if (L < 2) {
        throw InputError("QROM needs at least 2 entries, got " + std::to_string(L));
    }
    return TCount(4.0 * static_cast<double>(L) - 4.0);
}

QroamToffolis qroam_cost(std::int64_t d, std::int64_t M, std::int64_t k) {
    if (d < 1 || M < 1) {
        throw InputError("QROAM needs d >= 1 and M >= 1");
    }
    if (!is_power_of_two(k) || k > d) {
        throw InputError("QROAM k must be a power of two in [1, d], got " + std::to_string(k));
    }
    double lookups = ceil_div(d, k);
    return {lookups + static_cast<double>(M) * static_cast<double>(k - 1), lookups + static_cast<double>(k)};
}

std::int64_t qroam_optimal_k(std::int64_t d, std::int64_t M, QroamMode mode) {
    if (d < 1 || M < 1) {
        throw InputError("QROAM needs d >= 1 and M >= 1");
    }
    std::int64_t best_k = 1;
    double best = 0;
    for (std::int64_t k = 1; k <= d; k *= 2) {
        auto c = qroam_cost(d, M, k);
        double v = mode == QroamMode::compute ? c.compute : c.uncompute;
        if (k == 1 || v < best) {
            best = v;
            best_k = k;
        }
    }
    return best_k;
}

TCount uniform_superposition_cost(std::int64_t L, double eps_ss) {
    if (L < 2) {
        throw InputError("uniform superposition needs at least 2 states");
    }
    return TCount(8.0 * ceil_log2(static_cast<std::uint64_t>(L))) +
           2.0 * rotation_synthesis_cost(eps_ss, RotationKind::rz);
}

TCount uniform_superposition_cost_log2(double log2_L, double eps_ss) {
    if (!(log2_L >= 1.0)) {
        throw InputError("uniform superposition needs at least 2 states");
    }
    return TCount(8.0 * std::ceil(log2_L)) + 2.0 * rotation_synthesis_cost(eps_ss, RotationKind::rz);
}

double fermionic_fft_rotations(std::int64_t N) {
    if (N < 2 || !is_power_of_two(N)) {
        throw InputError("fermionic FFT needs a power-of-two mode count >= 2, got " + std::to_string(N));
    }
    int lg = ceil_log2(static_cast<std::uint64_t>(N));
    return static_cast<double>(N / 2) * (lg - 1);
}

TCount fermionic_fft_cost(std::int64_t N, double eps_ss) {
    double rotations = fermionic_fft_rotations(N);
    int lg = ceil_log2(static_cast<std::uint64_t>(N));
    double f2_gates = static_cast<double>(N / 2) * lg;
    TCount rot = rotations > 0 ? rotations * rotation_synthesis_cost(eps_ss, RotationKind::rz) : TCount(0);
    return rot + TCount(2.0 * f2_gates);
}

TCount taylor_series_eval_cost(int order, int n, SeriesKind kind) {
    if (order < 1) {
        throw InputError("series order must be >= 1");
    }
    require_width(n, "series");
    switch (kind) {
        case SeriesKind::exp:
            return (order - 1) * mult_cost(n) + (order - 1) * div_cost(n) + order * add_cost(n);
        case SeriesKind::sqrt_babylonian:
            return order * (add_cost(n) + div_cost(n));
        case SeriesKind::cosine_cordic:
            return div_cost(n) + (2 * order) * add_cost(n);
    }
    return TCount(0);
}

}  // namespace qpecost
