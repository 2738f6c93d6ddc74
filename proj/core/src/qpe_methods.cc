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

#include "qpecost/qpe_methods.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qpecost/cost_primitives.h"
#include "qpecost/errors.h"

namespace qpecost {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// T gates paired with the number of synthesised rotations they contain, so
// that eps_ss can be shared out after the circuit is assembled.
struct Tally {
    double t = 0;
    double rot = 0;
};
Tally operator+(Tally a, Tally b) {
    return {a.t + b.t, a.rot + b.rot};
}
Tally operator*(double k, Tally a) {
    return {k * a.t, k * a.rot};
}
Tally gates(TCount c) {
    return {c.value(), 0};
}
Tally gates(double t) {
    return {t, 0};
}
Tally rotation(double eps_ss, RotationKind kind, Control control) {
    return {rotation_synthesis_cost(eps_ss, kind, control).value(), 1};
}
Tally controlled_rz(double eps_ss) {
    return rotation(eps_ss, RotationKind::rz, Control::single);
}
Tally uniform(std::int64_t L, double eps_ss) {
    return {uniform_superposition_cost(L, eps_ss).value(), 2};
}
Tally uniform_log2(double log2_L, double eps_ss) {
    return {uniform_superposition_cost_log2(log2_L, eps_ss).value(), 2};
}
Tally fft(std::int64_t N, double eps_ss) {
    return {fermionic_fft_cost(N, eps_ss).value(), fermionic_fft_rotations(N)};
}

std::int64_t next_power_of_two(std::int64_t n) {
    std::int64_t p = 1;
    while (p < n) {
        p *= 2;
    }
    return p;
}

void require_positive_eps(double v, const char *name) {
    if (!(v > 0.0)) {
        throw InputError(std::string("allocation component ") + name + " must be > 0");
    }
}

// Everything a cost function reads besides the allocation.
struct Context {
    const MolecularParams &p;
    const CostModelConfig &cfg;
    std::int64_t n_pw;
    NormBounds norms;
    double lambda_pw;
    double lambda_prime;
    double ci_gamma;
};

// The walk shared by all Taylor-series estimators: (K-1) controlled
// rotations for the truncation weights, 2K Prepare, K Select, and two
// multi-controlled NOTs adapting the walk to the phase-estimation control.
// Oblivious amplitude amplification triples the walk.
CostBreakdown taylor_skeleton(MethodId m, double r, int K, Tally prepare, Tally select, double eps_ss) {
    Tally weights = (K - 1.0) * controlled_rz(eps_ss);
    Tally prepares = (2.0 * K) * prepare;
    Tally selects = static_cast<double>(K) * select;
    Tally adaptation = 2.0 * gates(multi_controlled_not_cost(K / 2 + 1));
    Tally walk = weights + prepares + selects + adaptation;
    double segment = 3.0 * walk.t;

    CostBreakdown b;
    b.method = m;
    b.r = r;
    b.K = K;
    b.total = TCount(r * segment);
    b.rotations = r * (3.0 * walk.rot);
    b.stages = {
        {"series_weights", TCount(r * (3.0 * weights.t))},
        {"prepare", TCount(r * (3.0 * prepares.t))},
        {"select", TCount(r * (3.0 * selects.t))},
        {"control_adaptation", TCount(r * (3.0 * adaptation.t))},
    };
    return b;
}

// Number of QPE-weighted segments for a walk with coefficient norm lambda.
double taylor_segments(double lambda, double t) {
    return std::ceil(lambda * t / kLn2);
}

// Amplitude bits for coefficient loading at energy resolution dE.
double amplitude_bits(double lambda, double dE, double h_norm) {
    if (!(dE < lambda)) {
        throw InfeasibleError("amplitude precision needs eps_pea < lambda");
    }
    if (!(h_norm < lambda)) {
        throw InfeasibleError("amplitude precision needs ||H|| < lambda");
    }
    return std::ceil(std::log2(2.0 * std::sqrt(2.0) * lambda / dE) + std::log2(1.0 + dE * dE / (8.0 * lambda * lambda)) -
                     std::log2(1.0 - h_norm / lambda));
}

double plane_wave_h_norm(const Context &c) {
    if (c.p.H_norm_bound) {
        return *c.p.H_norm_bound;
    }
    return c.norms.maxT + c.norms.maxU + c.norms.maxV;
}

// Phase kickback of a sampled coefficient onto the |m> register.
Tally kickback(int n, double eps_ss) {
    return 2.0 * gates(add_cost(n) + mult_cost(n) + compare_cost(n)) + controlled_rz(eps_ss);
}

CostBreakdown product_formula(MethodId m, double n, double eps_ss) {
    Tally per_exponential = 2.0 * rotation(eps_ss, RotationKind::rz, Control::none);
    CostBreakdown b;
    b.method = m;
    b.r = n;
    b.total = TCount(n * per_exponential.t);
    b.rotations = n * per_exponential.rot;
    b.stages = {{"exponentials", b.total}};
    return b;
}

double failure_probability(const Context &c, const ErrorAllocation &a) {
    double pf = c.cfg.p_fail + 2.0 * a.eps_hs;
    if (!(pf > 0.0)) {
        throw InputError("failure probability must be positive");
    }
    return pf;
}

CostBreakdown qdrift(const Context &c, const ErrorAllocation &a, double eps_ss) {
    double pf = failure_probability(c, a);
    double lambda = c.p.lambda_value;
    double n = std::ceil(133.0 * lambda * lambda / (a.eps_pea * a.eps_pea * pf * pf * pf));
    return product_formula(MethodId::qdrift, n, eps_ss);
}

CostBreakdown rand_hamiltonian(const Context &c, const ErrorAllocation &a, double eps_ss) {
    double pf = failure_probability(c, a);
    double n = std::ceil(69.0 * c.p.Gamma * c.p.Gamma * std::pow(c.p.Lambda_max, 1.5) /
                         (std::pow(a.eps_pea, 1.5) * pf * pf));
    return product_formula(MethodId::rand_hamiltonian, n, eps_ss);
}

Tally majorana_select(int N) {
    int l = ceil_log2(static_cast<std::uint64_t>(N));
    return 4.0 * gates(4.0 * N + N * multi_controlled_not_cost(l).value());
}

CostBreakdown taylor_naive(const Context &c, const ErrorAllocation &a, double eps_ss) {
    double t = phase_estimation_time(a.eps_pea);
    double r = taylor_segments(c.p.lambda_value, t);
    int K = taylor_truncation_order(2.0 * r / a.eps_hs);
    auto n4 = static_cast<std::uint64_t>(c.p.N);
    n4 = n4 * n4 * n4 * n4;
    double rotations = arbitrary_state_synthesis_rotations(ceil_log2(n4));
    Tally prepare = rotations * rotation(eps_ss, RotationKind::su2, Control::none);
    return taylor_skeleton(MethodId::taylor_naive, r, K, prepare, majorana_select(c.p.N), eps_ss);
}

CostBreakdown taylor_on_the_fly(const Context &c, const ErrorAllocation &a, double eps_ss) {
    const auto &p = c.p;
    double t = phase_estimation_time(a.eps_pea);
    double x = p.x_max ? *p.x_max : c.cfg.x_max_constant * std::log(p.N * t / a.eps_h);
    if (!(x > 0.0)) {
        throw InfeasibleError("orbital extent must be positive");
    }
    double phi = *p.phi_max;
    double phi_p = *p.phi_prime_max;
    double lambda = p.Gamma * 64.0 * std::pow(phi, 4) * std::pow(x, 5);
    double r = taylor_segments(lambda, t);
    int K = taylor_truncation_order(2.0 * r / a.eps_hs);
    double log2_mu =
        6.0 * std::log2((2.0 * r * 6.0 * K / a.eps_h) * (4.0 * phi_p + phi / x) * std::pow(phi, 3) * std::pow(x, 6));
    double mu_bits = std::ceil(log2_mu);
    int n = std::max(1, static_cast<int>(std::ceil(mu_bits / 3.0)));
    double log2_M = std::log2(6.0 * K * r * lambda / a.eps_h);
    int o = series_order_for(a.eps_tay, c.cfg.taylor_argument_bound);

    TCount q = static_cast<double>(p.N) * blocks::orbital_evaluation(p.basis_contraction_d, n, o);
    TCount q_lap = static_cast<double>(p.N) * blocks::orbital_laplacian(p.basis_contraction_d, n);
    blocks::SampleCosts s = blocks::gaussian_samples(q, q_lap, n, o, *p.J);
    TCount sample = s.two_body + s.kinetic + s.external;
    Tally prepare = 2.0 * gates(sample) + kickback(n, eps_ss) +
                    uniform_log2(std::log2(p.Gamma) + log2_mu + log2_M, eps_ss);

    CostBreakdown b = taylor_skeleton(MethodId::taylor_on_the_fly, r, K, prepare, majorana_select(p.N), eps_ss);
    b.mu = mu_bits;
    b.M = std::exp2(log2_M);
    b.M0_bits = n;
    b.series_order = o;
    return b;
}

// Comparator-network cost of sorting the eta occupied orbital indices of a
// determinant (w-bit registers) for one Find pass, forward and reversed.
TCount orbital_sort_pass(int eta, int w) {
    TCount insert = 3.0 * compare_cost(w) + TCount(4.0 * w);
    return 2.0 * (add_cost(w) + (eta - 1.0) * insert);
}

CostBreakdown configuration_interaction(const Context &c, const ErrorAllocation &a, double eps_ss) {
    const auto &p = c.p;
    const auto &cfg = c.cfg;
    double t = phase_estimation_time(a.eps_pea);
    double x = *p.x_max;
    double phi = *p.phi_max;
    double phi_p = *p.phi_prime_max;
    double alpha = *p.alpha_ci;
    double g2 = *p.gamma2_ci;
    double z_total = p.eta;
    if (p.charges) {
        z_total = 0;
        for (double z : *p.charges) {
            z_total += z;
        }
    }
    const double gamma = c.ci_gamma;

    // Bound on mu * max|coefficient| * zeta, with the integration radius
    // grown until the orbital tails fall below the target precision delta.
    auto mu_m_zeta = [&](double delta) {
        double R = x * (1.0 + std::max(0.0, std::log(phi * phi * std::pow(x, 3) / delta)) / alpha);
        return std::max({8.0 * g2 * phi * phi * R, 8.0 * z_total * phi * phi * R * R,
                         64.0 * std::pow(phi, 4) * std::pow(R, 5)});
    };

    double r = std::ceil(2.0 * gamma * t * mu_m_zeta(a.eps_h) / kLn2);
    bool converged = false;
    for (int it = 0; it < cfg.ci_max_iterations; ++it) {
        int K = taylor_truncation_order(2.0 * r / a.eps_hs);
        double delta = a.eps_h / (6.0 * K * r);
        double next = std::ceil(2.0 * gamma * t * mu_m_zeta(delta) / kLn2);
        if (std::abs(next - r) <= cfg.ci_tolerance * next) {
            r = next;
            converged = true;
            break;
        }
        r = next;
    }
    if (!converged) {
        throw InfeasibleError("segment count did not settle; last iterate r = " + std::to_string(r));
    }
    int K = taylor_truncation_order(2.0 * r / a.eps_hs);
    double delta = a.eps_h / (6.0 * K * r);
    double mmz = mu_m_zeta(delta);
    double log2_mu = 6.0 * std::log2((2.0 / delta) * (4.0 * phi_p + phi / x) * std::pow(phi, 3) * std::pow(x, 6));
    double mu_bits = std::ceil(log2_mu);
    int n = std::max(1, static_cast<int>(std::ceil(mu_bits / 3.0)));
    double log2_M = std::log2(mmz) - std::log2(delta) + std::log2(gamma);
    double log2_L = 1.0 + log2_M + std::log2(gamma);
    int o = series_order_for(a.eps_tay, cfg.taylor_argument_bound);

    // Values: two antisymmetrised two-body integrals plus one one-body
    // integral, orbitals indexed directly.
    TCount kappa = blocks::orbital_evaluation(p.basis_contraction_d, n, o);
    TCount kappa_lap = blocks::orbital_laplacian(p.basis_contraction_d, n);
    blocks::SampleCosts s = blocks::gaussian_samples(kappa, kappa_lap, n, o, *p.J);
    TCount q_val = 2.0 * s.two_body + (s.kinetic + s.external) + add_cost(n);

    // Columns: locate the differing orbitals (Find Alphas, Find Gammas).
    int w = std::max(1, ceil_log2(static_cast<std::uint64_t>(p.N)));
    TCount q_col = 2.0 * orbital_sort_pass(p.eta, w) + (2.0 * p.eta) * compare_cost(w);

    Tally prepare = uniform_log2(log2_L + log2_mu, eps_ss);
    Tally select = gates(q_col + 2.0 * q_val) + kickback(n, eps_ss);
    // Prepare already includes the uniform superposition; the column and
    // value oracles play the role of Select in the shared walk.
    CostBreakdown b = taylor_skeleton(MethodId::configuration_interaction, r, K, prepare, select, eps_ss);
    b.mu = mu_bits;
    b.M = std::exp2(log2_M);
    b.zeta = delta / (gamma * std::exp2(log2_mu));
    b.M0_bits = n;
    b.series_order = o;
    return b;
}

CostBreakdown low_depth_trotter(const Context &c, const ErrorAllocation &a, double eps_ss) {
    const double N = static_cast<double>(c.n_pw);
    double t = phase_estimation_time(a.eps_pea);
    double T = c.norms.maxT;
    double UV = c.norms.maxU + c.norms.maxV;
    double r = std::max(1.0, std::ceil(std::pow(t, 1.5) * std::sqrt(2.0 * (T * T * UV + T * UV * UV) / a.eps_hs)));

    Tally ffts = 2.0 * fft(next_power_of_two(c.n_pw), eps_ss);
    Tally singles = (16.0 * N) * rotation(eps_ss, RotationKind::rz, Control::none);
    Tally pairs = (8.0 * N * (8.0 * N - 1.0) / 2.0) * controlled_rz(eps_ss);
    Tally segment = ffts + singles + pairs;

    CostBreakdown b;
    b.method = MethodId::low_depth_trotter;
    b.r = r;
    b.total = TCount(r * segment.t);
    b.rotations = r * segment.rot;
    b.stages = {
        {"fermionic_fft", TCount(r * ffts.t)},
        {"single_mode_rotations", TCount(r * singles.t)},
        {"pair_rotations", TCount(r * pairs.t)},
    };
    return b;
}

CostBreakdown low_depth_taylor_naive(const Context &c, const ErrorAllocation &a, double eps_ss) {
    double t = phase_estimation_time(a.eps_pea);
    double r = taylor_segments(c.lambda_pw, t);
    int K = taylor_truncation_order(2.0 * r / a.eps_hs);
    double mu = amplitude_bits(c.lambda_pw, a.eps_pea, plane_wave_h_norm(c));

    Tally prepare{blocks::low_depth_subprepare(c.n_pw, mu, eps_ss).value(), 4};
    Tally select = gates(blocks::low_depth_select(c.n_pw));
    CostBreakdown b = taylor_skeleton(MethodId::low_depth_taylor_naive, r, K, prepare, select, eps_ss);
    b.mu = mu;
    return b;
}

CostBreakdown low_depth_taylor_on_the_fly(const Context &c, const ErrorAllocation &a, double eps_ss) {
    const double N = static_cast<double>(c.n_pw);
    double t = phase_estimation_time(a.eps_pea);
    double lambda = c.lambda_prime;
    double r = taylor_segments(lambda, t);
    int K = taylor_truncation_order(2.0 * r / a.eps_hs);
    double terms = 2.0 * std::pow(8.0 * N, 3);
    double zeta = a.eps_h / (terms * r);
    double max_w = lambda / terms;
    double M = max_w / zeta;
    int n = std::max(1, static_cast<int>(std::ceil(std::log2(N) / 3.0)));
    int o = series_order_for(a.eps_tay, c.cfg.taylor_argument_bound);
    int J = *c.p.J;

    double diagonal = blocks::diagonal_sample_cost(J, o, c.n_pw);
    TCount off_diagonal = 3.0 * mult_cost(n) + 3.0 * add_cost(n) + 3.0 * mult_cost(n) + 2.0 * add_cost(n) +
                          taylor_series_eval_cost(o, n, SeriesKind::cosine_cordic) + mult_cost(n) + div_cost(n);
    TCount parity = 2.0 * mult_cost(n);
    TCount sample = TCount(diagonal) + off_diagonal + parity;

    Tally prepare = 2.0 * gates(sample) + kickback(n, eps_ss) + uniform_log2(std::log2(terms) + std::log2(M), eps_ss);
    Tally select = gates(blocks::low_depth_select(c.n_pw));
    CostBreakdown b = taylor_skeleton(MethodId::low_depth_taylor_on_the_fly, r, K, prepare, select, eps_ss);
    b.M = M;
    b.zeta = zeta;
    b.M0_bits = n;
    b.series_order = o;
    return b;
}

CostBreakdown linear_t(const Context &c, const ErrorAllocation &a, double eps_ss) {
    int l = ceil_log2(static_cast<std::uint64_t>(c.n_pw));
    int bits = precision_bits(eps_ss);
    double t = phase_estimation_time(a.eps_pea);
    double r = std::ceil(c.lambda_pw * t / kLn2 * c.cfg.segment_inflation);
    double mu = amplitude_bits(c.lambda_pw, a.eps_pea, plane_wave_h_norm(c));

    Tally select = gates(blocks::linear_t_select(c.n_pw));
    Tally subprepare{blocks::linear_t_subprepare(c.n_pw, mu, eps_ss).value(), 4};
    Tally prepare = subprepare + Tally{8.0 * l + 8.0 * bits, 2} + gates(4.0 * (l - 1.0)) + gates(2.0 * 16.0 * l);
    if (l - 1 >= 1) {
        prepare = prepare + gates(add_cost(l - 1));
    }
    Tally reflection = gates(multi_controlled_not_cost(2 * l + 3));
    Tally prepares = 2.0 * prepare;
    Tally step = prepares + select + reflection;

    CostBreakdown b;
    b.method = MethodId::linear_t;
    b.r = r;
    b.mu = mu;
    b.total = TCount(r * step.t);
    b.rotations = r * step.rot;
    b.stages = {
        {"prepare", TCount(r * prepares.t)},
        {"select", TCount(r * select.t)},
        {"reflection", TCount(r * reflection.t)},
    };
    return b;
}

CostBreakdown sparsity_low_rank(const Context &c, const ErrorAllocation &a, double eps_ss) {
    const auto &p = c.p;
    const std::int64_t N = p.N;
    const std::int64_t L = *p.L_rank;
    if (L < 1) {
        throw InputError("L_rank must be >= 1 for the low-rank estimator");
    }
    if (N < 4) {
        throw InputError("low-rank estimator needs N >= 4");
    }
    int l = ceil_log2(static_cast<std::uint64_t>(N));
    int h = ceil_log2(static_cast<std::uint64_t>(N / 2));
    int lL = ceil_log2(static_cast<std::uint64_t>(L));
    int bits = precision_bits(eps_ss);
    double t = phase_estimation_time(a.eps_pea);
    double r = std::ceil(p.lambda_value * t / kLn2 * c.cfg.segment_inflation);

    std::int64_t d = blocks::low_rank_entries(L, N);
    double mu = blocks::amplitude_leading_bits(p.lambda_value, a.eps_pea);
    auto M = static_cast<std::int64_t>(ceil_log2(static_cast<std::uint64_t>(N * N)) + mu);
    std::int64_t kc = qroam_optimal_k(d, M, QroamMode::compute);
    std::int64_t ku = qroam_optimal_k(d, M, QroamMode::uncompute);
    double toffolis = qroam_cost(d, M, kc).compute + qroam_cost(d, M, ku).uncompute;

    Tally qroam = gates(4.0 * toffolis);
    Tally select = gates(4.0 * N + 4.0 * l);
    Tally rank_register{4.0 * L + 4.0 * mu + 14.0 * lL + 8.0 * bits, 2};
    Tally orbital_pair = 6.0 * uniform(N / 2, eps_ss) + 3.0 * rotation(eps_ss, RotationKind::rz, Control::none) +
                         3.0 * gates(compare_cost(h)) + 2.0 * gates(multi_controlled_not_cost(2 * h));
    Tally extras = rank_register + 2.0 * orbital_pair + gates(4.0 * mu) + gates(4.0 * (mu + lL + 4.0 * h)) +
                   gates(4.0 * 2.0 * h) + gates(4.0 * 2.0 * h * h);
    Tally prepares = 2.0 * extras;
    Tally step = qroam + select + prepares;

    CostBreakdown b;
    b.method = MethodId::sparsity_low_rank;
    b.r = r;
    b.mu = mu;
    b.M = static_cast<double>(M);
    b.total = TCount(r * step.t);
    b.rotations = r * step.rot;
    b.stages = {
        {"qroam", TCount(r * qroam.t)},
        {"select", TCount(r * select.t)},
        {"prepare", TCount(r * prepares.t)},
    };
    return b;
}

CostBreakdown interaction_picture(const Context &c, const ErrorAllocation &a, double eps_ss) {
    const auto &p = c.p;
    const std::int64_t N = c.n_pw;
    const std::int64_t half = N / 2;
    int l = ceil_log2(static_cast<std::uint64_t>(N));
    double t = phase_estimation_time(a.eps_pea);
    double T = p.norm_T ? *p.norm_T : c.norms.maxT;
    double H0 = (p.norm_U && p.norm_V) ? *p.norm_U + *p.norm_V : c.norms.maxU + c.norms.maxV;
    if (!(T > 0.0)) {
        throw InfeasibleError("interaction picture needs a positive kinetic norm");
    }
    double r = blocks::interaction_picture_segments(T, a.eps_pea);
    int K = dyson_truncation_order(2.0 * r / a.eps_hs);
    double M = std::ceil(std::max(16.0 * t * kLn2 / a.eps_hs * (2.0 * H0 + T), static_cast<double>(K) * K));
    auto m_int = static_cast<std::int64_t>(M);
    int m_bits = ceil_log2(static_cast<std::uint64_t>(m_int));
    int w = std::max(1, ceil_log2(static_cast<std::uint64_t>(p.eta)));
    int b_bits = c.cfg.arithmetic_bits;

    // Diagonal potential oracle: occupation sums, FFT to momentum, squared
    // magnitudes times V_k.
    Tally o_v = static_cast<double>(half) * gates(add_cost(w)) + fft(next_power_of_two(half), eps_ss) +
                static_cast<double>(N) * gates(mult_cost(b_bits));
    Tally phase = 2.0 * o_v + static_cast<double>(half) * controlled_rz(eps_ss) +
                  static_cast<double>(N) * controlled_rz(eps_ss);

    double mu_t = blocks::amplitude_leading_bits(T, a.eps_pea);
    Tally prepare_t = gates(qrom_cost(N)) + uniform(N, eps_ss) + gates(compare_cost(static_cast<int>(mu_t))) +
                      gates(4.0 * l);
    Tally select_t = gates(qrom_cost(N));
    Tally o_t = 2.0 * fft(next_power_of_two(N), eps_ss) + 2.0 * prepare_t + select_t + uniform(m_int, eps_ss) +
                2.0 * gates(compare_cost(m_bits));
    Tally ham_t = (2.0 * m_bits) * phase + o_t;

    double coef_rotations = arbitrary_state_synthesis_rotations(ceil_log2(static_cast<std::uint64_t>(K + 1)));
    Tally coef = coef_rotations * rotation(eps_ss, RotationKind::su2, Control::none);
    Tally dyson = static_cast<double>(K) * ham_t;
    Tally coefs = 2.0 * coef;
    Tally segment = 3.0 * (coefs + dyson) + phase;

    CostBreakdown b;
    b.method = MethodId::interaction_picture;
    b.r = r;
    b.K = K;
    b.M = M;
    b.mu = mu_t;
    b.M0_bits = m_bits;
    b.total = TCount(r * segment.t);
    b.rotations = r * segment.rot;
    b.stages = {
        {"coefficients", TCount(r * (3.0 * coefs.t))},
        {"dyson_terms", TCount(r * (3.0 * dyson.t))},
        {"interaction_frame", TCount(r * phase.t)},
    };
    return b;
}

void check_allocation(MethodId m, const ErrorAllocation &a) {
    for (auto s : applicable_errors(m)) {
        require_positive_eps(a[s], source_name(s));
    }
    if (!(a.eps_s < 1.0)) {
        throw InputError("eps_s must be below 1");
    }
}

}  // namespace

namespace blocks {

TCount orbital_evaluation(int d, int n, int o) {
    // Displacement, squared distance, exponent scaling, exponential,
    // polynomial prefactor and contraction weight, per primitive.
    TCount per_primitive = 3.0 * add_cost(n) + 3.0 * mult_cost(n) + 2.0 * add_cost(n) + mult_cost(n) +
                           taylor_series_eval_cost(o, n, SeriesKind::exp) + 3.0 * mult_cost(n);
    return static_cast<double>(d) * per_primitive;
}

TCount orbital_laplacian(int d, int n) {
    TCount per_primitive =
        3.0 * (4.0 * add_cost(n) + mult_cost(n) + div_cost(n)) + 2.0 * add_cost(n) + mult_cost(n);
    return static_cast<double>(d) * per_primitive;
}

TCount coulomb_kernel(int n, int o) {
    return 2.0 * mult_cost(n) + add_cost(n) + taylor_series_eval_cost(o, n, SeriesKind::sqrt_babylonian);
}

SampleCosts gaussian_samples(TCount q, TCount q_laplacian, int n, int o, int J) {
    TCount r = coulomb_kernel(n, o);
    TCount xi = 3.0 * add_cost(n);  // one displacement vector
    SampleCosts s;
    s.two_body = 4.0 * q + r + 4.0 * mult_cost(n) + xi;
    s.kinetic = q + q_laplacian + mult_cost(n);
    s.external = 2.0 * q;
    if (J > 0) {
        s.external = s.external + static_cast<double>(J) * r + static_cast<double>(J) * mult_cost(n) +
                     static_cast<double>(J) * xi;
        if (J > 1) {
            s.external = s.external + (J - 1.0) * add_cost(n);
        }
    }
    return s;
}

TCount low_depth_subprepare(std::int64_t N, double mu, double eps_ss) {
    const double n = static_cast<double>(N);
    int l = ceil_log2(static_cast<std::uint64_t>(N));
    return TCount(6.0 * n + 40.0 * l + 16.0 * precision_bits(eps_ss) + 10.0 * mu);
}

TCount low_depth_select(std::int64_t N) {
    return TCount(12.0 * static_cast<double>(N) + 8.0 * ceil_log2(static_cast<std::uint64_t>(N)));
}

TCount linear_t_subprepare(std::int64_t N, double mu, double eps_ss) {
    const double n = static_cast<double>(N);
    int l = ceil_log2(static_cast<std::uint64_t>(N));
    return TCount(6.0 * n + 12.0 * l + 10.0 * mu + 16.0 * precision_bits(eps_ss));
}

TCount linear_t_select(std::int64_t N) {
    return TCount(12.0 * static_cast<double>(N) + 8.0 * ceil_log2(static_cast<std::uint64_t>(N)) - 14.0);
}

double diagonal_sample_cost(int J, int o, std::int64_t N) {
    int l = ceil_log2(static_cast<std::uint64_t>(N));
    if (l < 1) {
        throw InputError("diagonal sample needs N >= 2");
    }
    return std::ceil(J * (35.0 * o / 2.0 + 63.0 + 2.0 * o / l) * l * l);
}

std::int64_t low_rank_entries(std::int64_t L, std::int64_t N) {
    return ((2 * L + 1) * N * (N + 2) + 7) / 8;
}

double amplitude_leading_bits(double lambda, double dE) {
    return std::ceil(std::log2(2.0 * std::sqrt(2.0) * lambda / dE));
}

double interaction_picture_segments(double norm_T, double eps_pea) {
    return std::ceil(phase_estimation_time(eps_pea) * norm_T / kLn2);
}

}  // namespace blocks

int series_order_for(double eps_tay, double argument_bound) {
    if (!(eps_tay > 0.0) || !(argument_bound > 0.0)) {
        throw InputError("series order needs eps_tay > 0 and a positive argument bound");
    }
    double term = 1.0;
    for (int o = 1; o <= 1000; ++o) {
        term *= argument_bound / o;
        if (term <= eps_tay) {
            return o;
        }
    }
    throw InfeasibleError("no series order up to 1000 meets eps_tay");
}

int taylor_truncation_order(double x) {
    if (!(x > 1.0) || !std::isfinite(x)) {
        throw InfeasibleError("Taylor truncation needs 2r/eps_hs > 1");
    }
    double K = std::ceil(-1.0 + 2.0 * std::log(x) / std::log(std::log(x) + 1.0));
    return static_cast<int>(std::max(1.0, K));
}

int dyson_truncation_order(double x) {
    if (!(x > 1.0) || !std::isfinite(x)) {
        throw InfeasibleError("Dyson truncation needs 2r/eps_hs > 1");
    }
    double denom = std::log(std::log(x)) + 1.0;
    if (!(denom > 0.0)) {
        throw InfeasibleError("Dyson truncation order undefined for 2r/eps_hs this small");
    }
    double K = std::ceil(-1.0 + 2.0 * std::log(x) / denom);
    return static_cast<int>(std::max(1.0, K));
}

Estimator::Estimator(MethodId method, const MolecularParams &params, const CostModelConfig &cfg)
    : method_(method), params_(params), cfg_(cfg) {
    const std::string who(method_name(method));
    switch (method) {
        case MethodId::qdrift:
        case MethodId::rand_hamiltonian:
        case MethodId::taylor_naive:
            break;
        case MethodId::taylor_on_the_fly:
            params_.require({"phi_max", "phi_prime_max", "J"}, who);
            break;
        case MethodId::configuration_interaction:
            params_.require({"x_max", "phi_max", "phi_prime_max", "alpha_ci", "gamma2_ci", "J"}, who);
            ci_gamma_ = ci_gamma(params_.eta, params_.N);
            break;
        case MethodId::low_depth_taylor_on_the_fly:
            params_.require({"Omega", "J"}, who);
            break;
        case MethodId::sparsity_low_rank:
            params_.require({"L_rank"}, who);
            if (*params_.L_rank < 1) {
                throw InputError("L_rank = 0 is a degenerate rank; rerun the extractor's rank decomposition");
            }
            break;
        default:
            params_.require({"Omega"}, who);
            break;
    }
    if (uses_plane_waves(method)) {
        n_pw_ = derive_plane_wave_count(params_.N, cfg_.plane_wave_multiplier);
        nu_sum_ = nu_inverse_square_sum(n_pw_, cfg_.nu_sum_exact_limit);
        norms_ = norm_bounds(params_.eta, *params_.Omega, n_pw_, nu_sum_);
        lambda_pw_ = plane_wave_lambda(n_pw_, params_.eta, *params_.Omega, nu_sum_);
        if (method == MethodId::low_depth_taylor_on_the_fly) {
            lambda_prime_ = lambda_prime_on_the_fly(n_pw_, params_.eta, *params_.Omega);
        }
    }
}

CostBreakdown Estimator::evaluate_at(const ErrorAllocation &alloc, double eps_ss) const {
    check_allocation(method_, alloc);
    Context c{params_, cfg_, n_pw_, norms_, lambda_pw_, lambda_prime_, ci_gamma_};
    CostBreakdown b;
    switch (method_) {
        case MethodId::qdrift:
            b = qdrift(c, alloc, eps_ss);
            break;
        case MethodId::rand_hamiltonian:
            b = rand_hamiltonian(c, alloc, eps_ss);
            break;
        case MethodId::taylor_naive:
            b = taylor_naive(c, alloc, eps_ss);
            break;
        case MethodId::taylor_on_the_fly:
            b = taylor_on_the_fly(c, alloc, eps_ss);
            break;
        case MethodId::configuration_interaction:
            b = configuration_interaction(c, alloc, eps_ss);
            break;
        case MethodId::low_depth_trotter:
            b = low_depth_trotter(c, alloc, eps_ss);
            break;
        case MethodId::low_depth_taylor_naive:
            b = low_depth_taylor_naive(c, alloc, eps_ss);
            break;
        case MethodId::low_depth_taylor_on_the_fly:
            b = low_depth_taylor_on_the_fly(c, alloc, eps_ss);
            break;
        case MethodId::linear_t:
            b = linear_t(c, alloc, eps_ss);
            break;
        case MethodId::sparsity_low_rank:
            b = sparsity_low_rank(c, alloc, eps_ss);
            break;
        case MethodId::interaction_picture:
            b = interaction_picture(c, alloc, eps_ss);
            break;
    }
    b.eps_ss = eps_ss;
    if (!std::isfinite(b.total.value())) {
        throw InfeasibleError(std::string(method_name(method_)) + " estimate is not finite");
    }
    return b;
}

CostBreakdown Estimator::evaluate(const ErrorAllocation &alloc) const {
    CostBreakdown first = evaluate_at(alloc, alloc.eps_s);
    if (!(first.rotations > 0.0)) {
        return first;
    }
    return evaluate_at(alloc, alloc.eps_s / first.rotations);
}

CostBreakdown estimate(MethodId method, const MolecularParams &params, const ErrorAllocation &alloc,
                       const CostModelConfig &cfg) {
    return Estimator(method, params, cfg).evaluate(alloc);
}

#define QPECOST_METHOD_ENTRY(fn, id)                                                              \
    CostBreakdown fn(const MolecularParams &p, const ErrorAllocation &a, const CostModelConfig &cfg) { \
        return estimate(MethodId::id, p, a, cfg);                                                  \
    }

QPECOST_METHOD_ENTRY(qdrift_cost, qdrift)
QPECOST_METHOD_ENTRY(rand_hamiltonian_cost, rand_hamiltonian)
QPECOST_METHOD_ENTRY(taylor_naive_cost, taylor_naive)
QPECOST_METHOD_ENTRY(taylor_on_the_fly_cost, taylor_on_the_fly)
QPECOST_METHOD_ENTRY(configuration_interaction_cost, configuration_interaction)
QPECOST_METHOD_ENTRY(low_depth_trotter_cost, low_depth_trotter)
QPECOST_METHOD_ENTRY(low_depth_taylor_naive_cost, low_depth_taylor_naive)
QPECOST_METHOD_ENTRY(low_depth_taylor_on_the_fly_cost, low_depth_taylor_on_the_fly)
QPECOST_METHOD_ENTRY(linear_t_cost, linear_t)
QPECOST_METHOD_ENTRY(sparsity_low_rank_cost, sparsity_low_rank)
QPECOST_METHOD_ENTRY(interaction_picture_cost, interaction_picture)

#undef QPECOST_METHOD_ENTRY

}  // namespace qpecost
