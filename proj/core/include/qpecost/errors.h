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

#ifndef QPECOST_ERRORS_H
#define QPECOST_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace qpecost {

/// Bad arguments, malformed files, missing fields. Maps to CLI exit code 1.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A parameter record lacks fields some estimator needs.
struct MissingFieldsError : InputError {
    MissingFieldsError(const std::string &what, std::vector<std::string> names)
        : InputError(what), fields(std::move(names)) {
    }
    std::vector<std::string> fields;
};

/// The inputs are well formed but no finite estimate exists (budget too small,
/// a formula leaves its domain, an iteration does not settle). Exit code 2.
struct InfeasibleError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace qpecost

#endif
