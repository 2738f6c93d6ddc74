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

#ifndef QPECOST_TOOLS_CLI_H
#define QPECOST_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpecost/error_model.h"
#include "qpecost/qpe_methods.h"
#include "qpecost/synthesis_time.h"

namespace qpecost::cli {

/// Everything the flat key=value config file can set.
struct RunConfig {
    std::string basis = "6-31G";
    std::string fixtures_dir;
    std::string ao_labels;  // forwarded to the extractor, never interpreted here
    ErrorBudget budget;
    OptimizerConfig optimizer;
    CostModelConfig model;
    SurfaceCodeConfig surface_code;
};

/// Parses `key = value` lines; '#' starts a comment. Unknown keys and
/// malformed values throw InputError naming the line.
RunConfig parse_config(const std::string &text, RunConfig base);
RunConfig load_config(const std::string &path, RunConfig base);

struct RunReport {
    std::string molecule;
    std::string basis;
    MethodId method{};
    double median_t_count = 0;
    double min_t_count = 0;
    double max_t_count = 0;
    ErrorAllocation best_allocation;
    CostBreakdown best_breakdown;
    double synthesis_time_seconds = 0;
    std::uint64_t seed = 0;
    int trials = 0;
};

RunReport run(const std::string &molecule, MethodId method, const RunConfig &cfg);

/// Two significant digits, e.g. 8.4e+13.
std::string sci2(double v);

std::string format_text(const RunReport &r);
std::string format_json(const RunReport &r);

struct MatrixCell {
    std::string molecule;
    MethodId method{};
    bool ok = false;
    int exit_code = 0;
    std::string error;
    RunReport report;
};

/// Runs every (molecule, method) pair concurrently; rows come back in input
/// order. Per-cell failures are recorded, not thrown.
std::vector<MatrixCell> run_matrix(const std::vector<std::string> &molecules, const std::vector<MethodId> &methods,
                                   const RunConfig &cfg);

std::string format_csv(const std::vector<MatrixCell> &cells);

/// Command-line entry point. Returns the process exit code:
/// 0 success, 1 input error, 2 infeasible estimate.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qpecost::cli

#endif
