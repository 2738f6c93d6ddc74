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

#include "qpecost/molecule_params.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qpecost/errors.h"

namespace qpecost {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t integer_cbrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
    while (r * r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

const std::set<std::string> &known_keys() {
    static const std::set<std::string> keys{
        "name",          "basis",     "N",         "eta",       "lambda_value", "Lambda_max",
        "Gamma",         "J",         "charges",   "Omega",     "x_max",        "phi_max",
        "phi_prime_max", "alpha_ci",  "gamma1_ci", "gamma2_ci", "L_rank",       "norm_T",
        "norm_U",        "norm_V",    "H_norm_bound", "basis_contraction_d", "metadata"};
    return keys;
}

template <typename T>
T get_required(const json &j, const char *key, std::vector<std::string> &missing) {
    if (!j.contains(key)) {
        missing.emplace_back(key);
        return T{};
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        throw InputError(std::string("field '") + key + "' has the wrong type");
    }
}

template <typename T>
void get_optional(const json &j, const char *key, std::optional<T> &out) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return;
    }
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception &) {
        throw InputError(std::string("field '") + key + "' has the wrong type");
    }
}

void require_positive(const std::optional<double> &v, const char *name) {
    if (v && !(*v > 0.0 && std::isfinite(*v))) {
        throw InputError(std::string(name) + " > 0 violated");
    }
}

void require_non_negative(const std::optional<double> &v, const char *name) {
    if (v && !(*v >= 0.0 && std::isfinite(*v))) {
        throw InputError(std::string(name) + " >= 0 violated");
    }
}

}  // namespace

void MolecularParams::require(const std::vector<std::string_view> &fields, std::string_view who) const {
    std::vector<std::string> missing;
    for (auto f : fields) {
        bool present = true;
        if (f == "J") {
            present = J.has_value();
        } else if (f == "charges") {
            present = charges.has_value();
        } else if (f == "Omega") {
            present = Omega.has_value();
        } else if (f == "x_max") {
            present = x_max.has_value();
        } else if (f == "phi_max") {
            present = phi_max.has_value();
        } else if (f == "phi_prime_max") {
            present = phi_prime_max.has_value();
        } else if (f == "alpha_ci") {
            present = alpha_ci.has_value();
        } else if (f == "gamma1_ci") {
            present = gamma1_ci.has_value();
        } else if (f == "gamma2_ci") {
            present = gamma2_ci.has_value();
        } else if (f == "L_rank") {
            present = L_rank.has_value();
        } else if (f == "norm_T") {
            present = norm_T.has_value();
        } else if (f == "norm_U") {
            present = norm_U.has_value();
        } else if (f == "norm_V") {
            present = norm_V.has_value();
        } else if (f == "H_norm_bound") {
            present = H_norm_bound.has_value();
        }
        if (!present) {
            missing.emplace_back(f);
        }
    }
    if (!missing.empty()) {
        std::string msg = std::string(who) + " needs missing parameter field(s):";
        for (const auto &m : missing) {
            msg += " " + m;
        }
        throw MissingFieldsError(msg, std::move(missing));
    }
}

std::vector<std::string> validate(const MolecularParams &p) {
    if (p.eta < 1) {
        throw InputError("eta >= 1 violated");
    }
    if (p.N < p.eta) {
        throw InputError("N >= eta violated (N=" + std::to_string(p.N) + ", eta=" + std::to_string(p.eta) + ")");
    }
    if (!(p.Lambda_max > 0.0)) {
        throw InputError("Lambda_max > 0 violated");
    }
    if (!(p.lambda_value >= p.Lambda_max)) {
        throw InputError("lambda_value >= Lambda_max violated");
    }
    if (!(p.Gamma >= 1.0)) {
        throw InputError("Gamma >= 1 violated");
    }
    require_positive(p.Omega, "Omega");
    require_positive(p.x_max, "x_max");
    require_positive(p.phi_max, "phi_max");
    require_positive(p.phi_prime_max, "phi_prime_max");
    require_positive(p.alpha_ci, "alpha_ci");
    require_non_negative(p.gamma1_ci, "gamma1_ci");
    require_non_negative(p.gamma2_ci, "gamma2_ci");
    require_non_negative(p.norm_T, "norm_T");
    require_non_negative(p.norm_U, "norm_U");
    require_non_negative(p.norm_V, "norm_V");
    require_positive(p.H_norm_bound, "H_norm_bound");
    if (p.L_rank) {
        if (*p.L_rank < 0) {
            throw InputError("L_rank >= 0 violated");
        }
        if (static_cast<double>(*p.L_rank) > static_cast<double>(p.N) * p.N / 4.0) {
            throw InputError("L_rank <= N^2/4 violated");
        }
    }
    if (p.basis_contraction_d < 1) {
        throw InputError("basis_contraction_d >= 1 violated");
    }
    if (p.J && *p.J < 0) {
        throw InputError("J >= 0 violated");
    }
    if (p.J && p.charges && static_cast<std::size_t>(*p.J) != p.charges->size()) {
        throw InputError("J == len(charges) violated");
    }
    std::vector<std::string> warnings;
    if (p.charges) {
        double z = 0;
        for (double c : *p.charges) {
            z += c;
        }
        if (std::abs(z - p.eta) > 1e-9) {
            warnings.push_back("nuclear charges sum to " + std::to_string(z) + " but eta = " + std::to_string(p.eta) +
                               " (ionic species?)");
        }
    }
    return warnings;
}

MolecularParams parse_params(std::string_view json_text, std::vector<std::string> *warnings) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("malformed parameter file: ") + e.what());
    }
    if (!j.is_object()) {
        throw InputError("parameter file must hold one JSON object");
    }
    for (const auto &item : j.items()) {
        if (!known_keys().contains(item.key())) {
            throw InputError("unknown parameter field '" + item.key() + "'");
        }
    }
    if (j.contains("metadata") && !j.at("metadata").is_object()) {
        throw InputError("field 'metadata' must be an object");
    }

    MolecularParams p;
    std::vector<std::string> missing;
    p.name = get_required<std::string>(j, "name", missing);
    p.basis = get_required<std::string>(j, "basis", missing);
    p.N = get_required<int>(j, "N", missing);
    p.eta = get_required<int>(j, "eta", missing);
    p.lambda_value = get_required<double>(j, "lambda_value", missing);
    p.Lambda_max = get_required<double>(j, "Lambda_max", missing);
    p.Gamma = get_required<double>(j, "Gamma", missing);
    if (!missing.empty()) {
        std::string msg = "parameter file lacks required field(s):";
        for (const auto &m : missing) {
            msg += " " + m;
        }
        throw MissingFieldsError(msg, std::move(missing));
    }
    get_optional(j, "J", p.J);
    get_optional(j, "charges", p.charges);
    get_optional(j, "Omega", p.Omega);
    get_optional(j, "x_max", p.x_max);
    get_optional(j, "phi_max", p.phi_max);
    get_optional(j, "phi_prime_max", p.phi_prime_max);
    get_optional(j, "alpha_ci", p.alpha_ci);
    get_optional(j, "gamma1_ci", p.gamma1_ci);
    get_optional(j, "gamma2_ci", p.gamma2_ci);
    get_optional(j, "L_rank", p.L_rank);
    get_optional(j, "norm_T", p.norm_T);
    get_optional(j, "norm_U", p.norm_U);
    get_optional(j, "norm_V", p.norm_V);
    get_optional(j, "H_norm_bound", p.H_norm_bound);
    std::optional<int> d;
    get_optional(j, "basis_contraction_d", d);
    if (d) {
        p.basis_contraction_d = *d;
    }
    if (p.charges && !p.J) {
        p.J = static_cast<int>(p.charges->size());
    }

    auto w = validate(p);
    if (warnings) {
        *warnings = std::move(w);
    }
    return p;
}

MolecularParams load_params(const std::string &path, std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open parameter file " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_params(ss.str(), warnings);
}

std::string serialize_params(const MolecularParams &p) {
    json j;
    j["name"] = p.name;
    j["basis"] = p.basis;
    j["N"] = p.N;
    j["eta"] = p.eta;
    j["lambda_value"] = p.lambda_value;
    j["Lambda_max"] = p.Lambda_max;
    j["Gamma"] = p.Gamma;
    auto put = [&](const char *key, const auto &opt) {
        if (opt) {
            j[key] = *opt;
        }
    };
    put("J", p.J);
    put("charges", p.charges);
    put("Omega", p.Omega);
    put("x_max", p.x_max);
    put("phi_max", p.phi_max);
    put("phi_prime_max", p.phi_prime_max);
    put("alpha_ci", p.alpha_ci);
    put("gamma1_ci", p.gamma1_ci);
    put("gamma2_ci", p.gamma2_ci);
    put("L_rank", p.L_rank);
    put("norm_T", p.norm_T);
    put("norm_U", p.norm_U);
    put("norm_V", p.norm_V);
    put("H_norm_bound", p.H_norm_bound);
    j["basis_contraction_d"] = p.basis_contraction_d;
    return j.dump(2);
}

std::string params_file_name(std::string_view molecule, std::string_view basis) {
    return std::string(molecule) + "_" + std::string(basis) + ".json";
}

std::int64_t derive_plane_wave_count(std::int64_t n_gauss, double multiplier) {
    if (n_gauss < 1 || !(multiplier > 0.0)) {
        throw InputError("plane-wave count needs n_gauss >= 1 and multiplier > 0");
    }
    return static_cast<std::int64_t>(std::floor(multiplier * static_cast<double>(n_gauss) + 0.5));
}

int nu_grid_half_width(std::int64_t N) {
    if (N < 8) {
        throw InputError("momentum grid needs N >= 8, got " + std::to_string(N));
    }
    return static_cast<int>(integer_cbrt(N) / 2);
}

double nu_inverse_square_bound(std::int64_t N) {
    if (N < 8) {
        throw InputError("momentum grid needs N >= 8, got " + std::to_string(N));
    }
    const double a = std::cbrt(static_cast<double>(N));
    // Inner integral over y in closed form, outer by composite Simpson.
    auto inner = [a](double x) { return (std::atan(a / x) - std::atan(1.0 / x)) / x; };
    const int intervals = 2048;
    const double h = (a - 1.0) / intervals;
    double acc = inner(1.0) + inner(a);
    for (int i = 1; i < intervals; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * inner(1.0 + i * h);
    }
    double plane = 3.0 * acc * h / 3.0;
    return 4.0 * kPi * (std::sqrt(3.0) * a / 2.0 - 1.0) + 3.0 - 3.0 / a + plane;
}

double nu_inverse_square_sum(std::int64_t N, std::int64_t exact_limit) {
    const int m = nu_grid_half_width(N);
    if (N > exact_limit) {
        return nu_inverse_square_bound(N);
    }
    // Sum one octant (components >= 0) and weight by the number of sign images.
    double sum = 0;
    for (int x = 0; x <= m; ++x) {
        for (int y = 0; y <= m; ++y) {
            for (int z = 0; z <= m; ++z) {
                int q = x * x + y * y + z * z;
                if (q == 0) {
                    continue;
                }
                int images = (x ? 2 : 1) * (y ? 2 : 1) * (z ? 2 : 1);
                sum += images / static_cast<double>(q);
            }
        }
    }
    return sum;
}

NormBounds norm_bounds(int eta, double Omega, std::int64_t N_pw, double nu_sum) {
    if (!(Omega > 0.0)) {
        throw InputError("Omega > 0 violated");
    }
    const double e = eta;
    const double c = std::cbrt(Omega);
    const double nu_max = std::cbrt(static_cast<double>(N_pw));
    NormBounds b{};
    b.maxV = e * e / (2.0 * kPi * c) * nu_sum;
    b.maxU = e * e / (kPi * c) * nu_sum;
    b.maxT = 2.0 * kPi * kPi * e / (c * c) * nu_max * nu_max;
    return b;
}

double plane_wave_lambda(std::int64_t N_pw, int eta, double Omega, double nu_sum) {
    if (!(Omega > 0.0)) {
        throw InputError("Omega > 0 violated");
    }
    const double n = static_cast<double>(N_pw);
    const double c = std::cbrt(Omega);
    double pairs = n * (n - 1.0) * nu_sum / (16.0 * kPi * c);
    double singles = n * (2.0 * eta + 1.0) * nu_sum / (8.0 * kPi * c);
    double hopping = 2.0 * kPi * kPi * std::pow(n, 5.0 / 3.0) / (c * c);
    return pairs + singles + hopping;
}

double lambda_prime_on_the_fly(std::int64_t N_pw, int eta, double Omega, bool *used_fallback) {
    if (!(Omega > 0.0) || N_pw < 1) {
        throw InputError("on-the-fly lambda needs Omega > 0 and N >= 1");
    }
    const double n = static_cast<double>(N_pw);
    const double c = std::cbrt(Omega);
    const double lead = (2.0 * eta + 1.0) / (8.0 * kPi * c) - kPi * kPi / (2.0 * n * c * c);
    const double other = std::max(1.0 / (8.0 * kPi * c), 6.0 * kPi * kPi / (std::cbrt(n) * c * c));
    const double terms = 2.0 * std::pow(8.0 * n, 3.0);
    const bool fallback = !(lead >= other);
    if (used_fallback) {
        *used_fallback = fallback;
    }
    double value = terms * (fallback ? other : lead);
    if (!(value > 0.0)) {
        throw InputError("on-the-fly lambda is not positive for these parameters");
    }
    return value;
}

double ci_gamma(int eta, int N) {
    if (eta < 1 || N <= eta) {
        throw InputError("CI sparsity needs N > eta >= 1");
    }
    auto choose2 = [](double k) { return k * (k - 1.0) / 2.0; };
    const double e = eta;
    const double v = N - eta;
    return choose2(e) * choose2(v) + e * v + 1.0;
}

}  // namespace qpecost
