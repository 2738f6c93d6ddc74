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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpecost/errors.h"
#include "qpecost/molecule_params.h"

#ifndef QPECOST_DEFAULT_FIXTURES_DIR
#define QPECOST_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace qpecost::cli {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string &v, const std::string &key) {
    try {
        std::size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return d;
    } catch (const std::exception &) {
        throw InputError("config key '" + key + "' expects a number, got '" + v + "'");
    }
}

std::int64_t to_int(const std::string &v, const std::string &key) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw InputError("config key '" + key + "' expects an integer, got '" + v + "'");
    }
    return out;
}

using Setter = std::function<void(RunConfig &, const std::string &, const std::string &)>;

const std::map<std::string, Setter> &setters() {
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        t["basis"] = [](RunConfig &c, const std::string &, const std::string &v) { c.basis = v; };
        t["fixtures_dir"] = [](RunConfig &c, const std::string &, const std::string &v) { c.fixtures_dir = v; };
        t["ao_labels"] = [](RunConfig &c, const std::string &, const std::string &v) { c.ao_labels = v; };
        t["budget"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.budget.total = to_double(v, k);
        };
        t["trials"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.optimizer.trials = static_cast<int>(to_int(v, k));
        };
        t["seed"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.optimizer.seed = static_cast<std::uint64_t>(to_int(v, k));
        };
        t["threads"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.optimizer.threads = static_cast<int>(to_int(v, k));
        };
        t["max_sweeps"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.optimizer.max_sweeps = static_cast<int>(to_int(v, k));
        };
        t["t_per_magic_state_seconds"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.surface_code.t_per_magic_state_seconds = to_double(v, k);
        };
        t["n_factories"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.surface_code.factories = to_double(v, k);
        };
        t["plane_wave_multiplier"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.plane_wave_multiplier = to_double(v, k);
        };
        t["p_fail"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.p_fail = to_double(v, k);
        };
        t["x_max_constant"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.x_max_constant = to_double(v, k);
        };
        t["taylor_argument_bound"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.taylor_argument_bound = to_double(v, k);
        };
        t["segment_inflation"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.segment_inflation = to_double(v, k);
        };
        t["arithmetic_bits"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.arithmetic_bits = static_cast<int>(to_int(v, k));
        };
        t["ci_tolerance"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.ci_tolerance = to_double(v, k);
        };
        t["ci_max_iterations"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.ci_max_iterations = static_cast<int>(to_int(v, k));
        };
        t["nu_sum_exact_limit"] = [](RunConfig &c, const std::string &k, const std::string &v) {
            c.model.nu_sum_exact_limit = to_int(v, k);
        };
        for (auto s : kAllSources) {
            std::string key = std::string("cap_") + source_name(s);
            t[key] = [s](RunConfig &c, const std::string &k, const std::string &v) {
                c.budget.caps[static_cast<std::size_t>(s)] = to_double(v, k);
            };
        }
        return t;
    }();
    return table;
}

std::string fixtures_dir(const RunConfig &cfg) {
    return cfg.fixtures_dir.empty() ? std::string(QPECOST_DEFAULT_FIXTURES_DIR) : cfg.fixtures_dir;
}

nlohmann::json allocation_json(const ErrorAllocation &a, MethodId m) {
    nlohmann::json j = nlohmann::json::object();
    for (auto s : applicable_errors(m)) {
        j[source_name(s)] = a[s];
    }
    return j;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

RunConfig parse_config(const std::string &text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw InputError("config line " + std::to_string(number) + ": expected key = value");
        }
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        auto it = setters().find(key);
        if (it == setters().end()) {
            throw InputError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
        }
        it->second(base, key, value);
    }
    return base;
}

RunConfig load_config(const std::string &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open config file " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

RunReport run(const std::string &molecule, MethodId method, const RunConfig &cfg) {
    auto path = std::filesystem::path(fixtures_dir(cfg)) / params_file_name(molecule, cfg.basis);
    if (!std::filesystem::exists(path)) {
        throw InputError("parameter file not found: expected " + path.string());
    }
    MolecularParams params = load_params(path.string());
    Estimator est(method, params, cfg.model);
    auto cost = [&est](const ErrorAllocation &a) { return est.evaluate(a).total.value(); };
    OptimizeResult opt = optimize_allocation(cost, applicable_errors(method), cfg.budget, cfg.optimizer);

    RunReport r;
    r.molecule = molecule;
    r.basis = cfg.basis;
    r.method = method;
    r.median_t_count = opt.median;
    r.min_t_count = *std::min_element(opt.trial_costs.begin(), opt.trial_costs.end());
    r.max_t_count = *std::max_element(opt.trial_costs.begin(), opt.trial_costs.end());
    r.best_allocation = opt.best;
    r.best_breakdown = est.evaluate(opt.best);
    r.synthesis_time_seconds = synthesis_time(TCount(opt.median), cfg.surface_code);
    r.seed = cfg.optimizer.seed;
    r.trials = cfg.optimizer.trials;
    return r;
}

std::string sci2(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(1) << v;
    return os.str();
}

std::string format_text(const RunReport &r) {
    const auto &b = r.best_breakdown;
    std::ostringstream os;
    os << "molecule: " << r.molecule << "\n";
    os << "basis: " << r.basis << "\n";
    os << "method: " << method_name(r.method) << "\n";
    os << "median_t_count: " << sci2(r.median_t_count) << "\n";
    os << "trials: " << r.trials << " (min " << sci2(r.min_t_count) << ", max " << sci2(r.max_t_count) << ")\n";
    os << "synthesis_time_seconds: " << sci2(r.synthesis_time_seconds) << "\n";
    os << "best_allocation:";
    for (auto s : applicable_errors(r.method)) {
        os << " " << source_name(s) << "=" << sci2(r.best_allocation[s]);
    }
    os << "\n";
    os << "best_t_count: " << sci2(b.total.value()) << "\n";
    os << "constants: r=" << sci2(b.r);
    if (b.K > 0) {
        os << " K=" << b.K;
    }
    if (b.M > 0) {
        os << " M=" << sci2(b.M);
    }
    if (b.mu > 0) {
        os << " mu=" << b.mu;
    }
    if (b.series_order > 0) {
        os << " order=" << b.series_order;
    }
    os << " eps_ss=" << sci2(b.eps_ss) << "\n";
    os << "seed: " << r.seed << "\n";
    return os.str();
}

std::string format_json(const RunReport &r) {
    const auto &b = r.best_breakdown;
    nlohmann::json j;
    j["molecule"] = r.molecule;
    j["basis"] = r.basis;
    j["method"] = std::string(method_name(r.method));
    j["median_t_count"] = r.median_t_count;
    j["min_t_count"] = r.min_t_count;
    j["max_t_count"] = r.max_t_count;
    j["synthesis_time_seconds"] = r.synthesis_time_seconds;
    j["best_allocation"] = allocation_json(r.best_allocation, r.method);
    nlohmann::json c;
    c["total"] = b.total.value();
    c["r"] = b.r;
    c["K"] = b.K;
    c["M"] = b.M;
    c["mu"] = b.mu;
    c["zeta"] = b.zeta;
    c["M0_bits"] = b.M0_bits;
    c["series_order"] = b.series_order;
    c["eps_ss"] = b.eps_ss;
    c["rotations"] = b.rotations;
    nlohmann::json stages = nlohmann::json::object();
    for (const auto &s : b.stages) {
        stages[s.name] = s.cost.value();
    }
    c["stages"] = stages;
    j["best_breakdown"] = c;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    return j.dump(2);
}

std::vector<MatrixCell> run_matrix(const std::vector<std::string> &molecules, const std::vector<MethodId> &methods,
                                   const RunConfig &cfg) {
    RunConfig cell_cfg = cfg;
    cell_cfg.optimizer.threads = 1;  // parallelism comes from the cells
    std::vector<std::future<MatrixCell>> jobs;
    for (const auto &mol : molecules) {
        for (auto m : methods) {
            jobs.push_back(std::async(std::launch::async, [mol, m, &cell_cfg] {
                MatrixCell cell;
                cell.molecule = mol;
                cell.method = m;
                try {
                    cell.report = run(mol, m, cell_cfg);
                    cell.ok = true;
                } catch (const InfeasibleError &e) {
                    cell.exit_code = 2;
                    cell.error = e.what();
                } catch (const InputError &e) {
                    cell.exit_code = 1;
                    cell.error = e.what();
                }
                return cell;
            }));
        }
    }
    std::vector<MatrixCell> cells;
    cells.reserve(jobs.size());
    for (auto &j : jobs) {
        cells.push_back(j.get());
    }
    return cells;
}

std::string format_csv(const std::vector<MatrixCell> &cells) {
    std::ostringstream os;
    os << "molecule,method,status,median_t_count,min_t_count,max_t_count,synthesis_time_seconds,error\n";
    for (const auto &c : cells) {
        os << c.molecule << "," << method_name(c.method) << ",";
        if (c.ok) {
            os << "ok," << format_double(c.report.median_t_count) << "," << format_double(c.report.min_t_count) << ","
               << format_double(c.report.max_t_count) << "," << format_double(c.report.synthesis_time_seconds)
               << ",";
        } else {
            std::string msg = c.error;
            std::replace(msg.begin(), msg.end(), '"', '\'');
            os << (c.exit_code == 2 ? "infeasible" : "input_error") << ",,,,,\"" << msg << "\"";
        }
        os << "\n";
    }
    return os.str();
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"T-gate cost estimates for quantum phase estimation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string basis;
    std::string fixtures;
    std::int64_t seed = -1;
    int trials = 0;

    auto *run_cmd = app.add_subcommand("run", "Estimate one method on one molecule");
    std::string molecule;
    std::string method_text;
    bool as_json = false;
    run_cmd->add_option("molecule", molecule, "Molecule name, e.g. h2")->required();
    run_cmd->add_option("method", method_text, "Method identifier")->required();
    run_cmd->add_flag("--json", as_json, "Print the machine-readable record");

    auto *matrix_cmd = app.add_subcommand("matrix", "Estimate every molecule/method pair");
    std::vector<std::string> molecules;
    std::vector<std::string> method_list;
    std::string csv_path;
    matrix_cmd->add_option("--molecules", molecules, "Comma-separated molecules")->delimiter(',')->required();
    matrix_cmd->add_option("--methods", method_list, "Comma-separated methods")->delimiter(',')->required();
    matrix_cmd->add_option("--csv", csv_path, "Write the table here instead of standard output");

    for (auto *cmd : {run_cmd, matrix_cmd}) {
        cmd->add_option("--config", config_path, "Flat key = value configuration file");
        cmd->add_option("--seed", seed, "Optimizer seed");
        cmd->add_option("--trials", trials, "Optimizer trials");
        cmd->add_option("--basis", basis, "Basis label of the parameter file");
        cmd->add_option("--fixtures", fixtures, "Directory holding parameter files");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            cfg = load_config(config_path, cfg);
        }
        if (seed >= 0) {
            cfg.optimizer.seed = static_cast<std::uint64_t>(seed);
        }
        if (trials > 0) {
            cfg.optimizer.trials = trials;
        }
        if (!basis.empty()) {
            cfg.basis = basis;
        }
        if (!fixtures.empty()) {
            cfg.fixtures_dir = fixtures;
        }

        auto method_of = [](const std::string &name) {
            auto m = parse_method(name);
            if (!m) {
                throw InputError("unknown method '" + name + "'; valid identifiers: " + method_names_joined());
            }
            return *m;
        };

        if (*run_cmd) {
            RunReport r = run(molecule, method_of(method_text), cfg);
            out << (as_json ? format_json(r) + "\n" : format_text(r));
            return 0;
        }
        std::vector<MethodId> methods;
        for (const auto &m : method_list) {
            methods.push_back(method_of(m));
        }
        auto cells = run_matrix(molecules, methods, cfg);
        std::string csv = format_csv(cells);
        if (csv_path.empty()) {
            out << csv;
        } else {
            std::ofstream f(csv_path);
            if (!f) {
                throw InputError("cannot write " + csv_path);
            }
            f << csv;
        }
        return 0;
    } catch (const MissingFieldsError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleError &e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qpecost::cli
