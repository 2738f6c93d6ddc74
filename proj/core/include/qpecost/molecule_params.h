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

#ifndef QPECOST_MOLECULE_PARAMS_H
#define QPECOST_MOLECULE_PARAMS_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpecost {

/// Molecule- and basis-level scalars read by the estimators.
///
/// Energies are in Hartree, lengths in bohr. Fields an estimator may or may
/// not need are optional; `require` reports the missing ones by name.
struct MolecularParams {
    std::string name;
    std::string basis;
    int N = 0;    // spin orbitals
    int eta = 0;  // electrons
    double lambda_value = 0;
    double Lambda_max = 0;
    double Gamma = 0;

    std::optional<int> J;
    std::optional<std::vector<double>> charges;
    std::optional<double> Omega;
    std::optional<double> x_max;
    std::optional<double> phi_max;
    std::optional<double> phi_prime_max;
    std::optional<double> alpha_ci;
    std::optional<double> gamma1_ci;
    std::optional<double> gamma2_ci;
    std::optional<int> L_rank;
    std::optional<double> norm_T;
    std::optional<double> norm_U;
    std::optional<double> norm_V;
    std::optional<double> H_norm_bound;
    int basis_contraction_d = 6;

    /// Throws MissingFieldsError naming every absent field in `fields`.
    void require(const std::vector<std::string_view> &fields, std::string_view who) const;

    friend bool operator==(const MolecularParams &, const MolecularParams &) = default;
};

/// Checks the record's invariants. Throws InputError naming the violated
/// constraint. Returns warnings (currently only charge neutrality).
std::vector<std::string> validate(const MolecularParams &p);

/// Parses and validates one JSON object. Unknown keys are rejected; a
/// top-level "metadata" object is accepted and ignored.
MolecularParams parse_params(std::string_view json_text, std::vector<std::string> *warnings = nullptr);
MolecularParams load_params(const std::string &path, std::vector<std::string> *warnings = nullptr);
std::string serialize_params(const MolecularParams &p);

/// File name `<molecule>_<basis>.json`.
std::string params_file_name(std::string_view molecule, std::string_view basis);

/// round(multiplier * n_gauss), halves rounded up.
std::int64_t derive_plane_wave_count(std::int64_t n_gauss, double multiplier);

/// Side half-width of the momentum grid: floor(cbrt(N) / 2).
int nu_grid_half_width(std::int64_t N);

/// Closed-form upper-bound expression for the lattice sum below.
double nu_inverse_square_bound(std::int64_t N);

/// Sum of 1/|nu|^2 over nonzero integer vectors with every component in
/// [-m, m], m = nu_grid_half_width(N). Enumerated exactly while the grid has
/// at most `exact_limit` points, otherwise replaced by the bound.
double nu_inverse_square_sum(std::int64_t N, std::int64_t exact_limit = 1000000);

struct NormBounds {
    double maxT;
    double maxU;
    double maxV;
};

/// Expectation-value bounds of kinetic, external and electron-electron terms
/// for a plane-wave grid of N_pw orbitals in a cell of volume Omega.
NormBounds norm_bounds(int eta, double Omega, std::int64_t N_pw, double nu_sum);

/// Coefficient 1-norm of the dual plane-wave Hamiltonian, bounding every
/// coefficient by its cosine-free maximum: pair terms, single-mode terms and
/// the kinetic hopping terms.
double plane_wave_lambda(std::int64_t N_pw, int eta, double Omega, double nu_sum);

/// Scaled coefficient sum for on-the-fly plane-wave coefficient sampling.
/// `used_fallback` reports whether the leading candidate lost the maximum.
double lambda_prime_on_the_fly(std::int64_t N_pw, int eta, double Omega, bool *used_fallback = nullptr);

/// Number of determinant pairs differing in at most two orbitals:
/// C(eta,2) C(N-eta,2) + eta (N-eta) + 1. Returned as a double since it
/// overflows 64 bits for large active spaces.
double ci_gamma(int eta, int N);

}  // namespace qpecost

#endif
