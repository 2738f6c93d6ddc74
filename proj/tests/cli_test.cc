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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "qpecost/errors.h"

using namespace qpecost;
using namespace qpecost::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qpecost");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(cli, run_h2_taylor_naive) {
    auto r = invoke({"run", "h2", "taylor_naive", "--trials", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_NE(r.out.find("method: taylor_naive"), std::string::npos);
    ASSERT_NE(r.out.find("median_t_count: "), std::string::npos);
    ASSERT_NE(r.out.find("synthesis_time_seconds: "), std::string::npos);
}

TEST(cli, report_is_byte_identical_for_same_seed) {
    auto a = invoke({"run", "h2", "linear_t", "--trials", "15", "--seed", "9", "--json"});
    auto b = invoke({"run", "h2", "linear_t", "--trials", "15", "--seed", "9", "--json"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(a.out, b.out);
}

TEST(cli, unknown_method_lists_all_identifiers) {
    auto r = invoke({"run", "h2", "not_a_method"});
    ASSERT_EQ(r.code, 1);
    for (auto m : kAllMethods) {
        ASSERT_NE(r.err.find(std::string(method_name(m))), std::string::npos) << method_name(m);
    }
}

TEST(cli, missing_file_names_expected_path) {
    auto r = invoke({"run", "unobtainium", "qdrift"});
    ASSERT_EQ(r.code, 1);
    ASSERT_NE(r.err.find("unobtainium_6-31G.json"), std::string::npos) << r.err;
}

TEST(cli, missing_fields_are_listed) {
    auto r = invoke({"run", "femoco_reiher", "low_depth_trotter", "--basis", "cas54", "--trials", "3"});
    ASSERT_EQ(r.code, 1);
    ASSERT_NE(r.err.find("Omega"), std::string::npos) << r.err;
}

TEST(cli, zero_budget_is_exit_code_two) {
    auto cfg = temp_file("qpecost_zero_budget.conf", "budget = 0\n");
    auto r = invoke({"run", "h2", "qdrift", "--config", cfg, "--trials", "3"});
    ASSERT_EQ(r.code, 2) << r.err;
    ASSERT_NE(r.err.find("infeasible budget"), std::string::npos);
}

TEST(cli, config_parsing) {
    auto cfg = parse_config(
        "# comment\n"
        "basis = sto-3g\n"
        "plane_wave_multiplier = 50   # trailing\n"
        "trials = 12\n"
        "seed = 4\n"
        "budget = 0.002\n"
        "t_per_magic_state_seconds = 1e-5\n"
        "n_factories = 8\n"
        "cap_eps_pea = 0.001\n"
        "ao_labels = Fe 3d, S 3p\n",
        RunConfig{});
    ASSERT_EQ(cfg.basis, "sto-3g");
    ASSERT_EQ(cfg.model.plane_wave_multiplier, 50);
    ASSERT_EQ(cfg.optimizer.trials, 12);
    ASSERT_EQ(cfg.optimizer.seed, 4u);
    ASSERT_EQ(cfg.budget.total, 0.002);
    ASSERT_EQ(cfg.surface_code.t_per_magic_state_seconds, 1e-5);
    ASSERT_EQ(cfg.surface_code.factories, 8);
    ASSERT_EQ(cfg.budget.caps[static_cast<std::size_t>(ErrorSource::pea)], 0.001);
    ASSERT_EQ(cfg.ao_labels, "Fe 3d, S 3p");
    ASSERT_THROW(parse_config("colour = red\n", RunConfig{}), InputError);
    ASSERT_THROW(parse_config("trials = many\n", RunConfig{}), InputError);
    ASSERT_THROW(parse_config("trials\n", RunConfig{}), InputError);
}

TEST(cli, text_numbers_have_two_significant_digits) {
    ASSERT_EQ(sci2(4.41e12), "4.4e+12");
    ASSERT_EQ(sci2(1.24e-3), "1.2e-03");
    ASSERT_EQ(sci2(7.2e21), "7.2e+21");
}

TEST(cli, report_invariants) {
    RunConfig cfg;
    cfg.optimizer.trials = 30;
    auto r = run("h2", MethodId::sparsity_low_rank, cfg);
    ASSERT_LE(r.min_t_count, r.median_t_count);
    ASSERT_LE(r.median_t_count, r.max_t_count);
    ASSERT_EQ(r.synthesis_time_seconds, r.median_t_count * 1e-4);
}

TEST(cli, matrix_row_matches_single_run) {
    RunConfig cfg;
    cfg.optimizer.trials = 10;
    auto cells = run_matrix({"h2", "hf"}, {MethodId::linear_t, MethodId::taylor_naive}, cfg);
    ASSERT_EQ(cells.size(), 4u);
    ASSERT_EQ(cells[0].molecule, "h2");
    ASSERT_EQ(cells[0].method, MethodId::linear_t);
    ASSERT_EQ(cells[3].molecule, "hf");
    ASSERT_EQ(cells[3].method, MethodId::taylor_naive);
    for (const auto &c : cells) {
        ASSERT_TRUE(c.ok) << c.error;
        auto single = run(c.molecule, c.method, cfg);
        ASSERT_EQ(format_json(c.report), format_json(single));
    }
}

TEST(cli, matrix_records_failures_in_table) {
    auto csv_path = (std::filesystem::temp_directory_path() / "qpecost_matrix.csv").string();
    auto r = invoke({"matrix", "--molecules", "h2,nowhere", "--methods", "qdrift", "--trials", "5", "--csv", csv_path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(csv_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string csv = ss.str();
    ASSERT_NE(csv.find("h2,qdrift,ok,"), std::string::npos) << csv;
    ASSERT_NE(csv.find("nowhere,qdrift,input_error,"), std::string::npos) << csv;
}

TEST(cli, full_matrix_has_a_row_per_pair) {
    RunConfig cfg;
    cfg.optimizer.trials = 3;
    std::vector<std::string> mols{"h2", "hf", "h2o", "nh3", "ch4", "o2", "co2", "nacl"};
    std::vector<MethodId> methods(kAllMethods.begin(), kAllMethods.end());
    auto csv = format_csv(run_matrix(mols, methods, cfg));
    ASSERT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 88);
}
