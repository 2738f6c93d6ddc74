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

#include "qpecost/method_id.h"

namespace qpecost {

std::string_view method_name(MethodId m) {
    switch (m) {
        case MethodId::qdrift:
            return "qdrift";
        case MethodId::rand_hamiltonian:
            return "rand_hamiltonian";
        case MethodId::taylor_naive:
            return "taylor_naive";
        case MethodId::taylor_on_the_fly:
            return "taylor_on_the_fly";
        case MethodId::configuration_interaction:
            return "configuration_interaction";
        case MethodId::low_depth_trotter:
            return "low_depth_trotter";
        case MethodId::low_depth_taylor_naive:
            return "low_depth_taylor_naive";
        case MethodId::low_depth_taylor_on_the_fly:
            return "low_depth_taylor_on_the_fly";
        case MethodId::linear_t:
            return "linear_t";
        case MethodId::sparsity_low_rank:
            return "sparsity_low_rank";
        case MethodId::interaction_picture:
            return "interaction_picture";
    }
    return "?";
}

std::optional<MethodId> parse_method(std::string_view name) {
    for (auto m : kAllMethods) {
        if (method_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::string method_names_joined() {
    std::string out;
    for (auto m : kAllMethods) {
        if (!out.empty()) {
            out += ", ";
        }
        out += method_name(m);
    }
    return out;
}

bool uses_plane_waves(MethodId m) {
    switch (m) {
        case MethodId::low_depth_trotter:
        case MethodId::low_depth_taylor_naive:
        case MethodId::low_depth_taylor_on_the_fly:
        case MethodId::linear_t:
        case MethodId::interaction_picture:
            return true;
        default:
            return false;
    }
}

}  // namespace qpecost
