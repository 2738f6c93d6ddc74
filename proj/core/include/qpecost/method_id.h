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

#ifndef QPECOST_METHOD_ID_H
#define QPECOST_METHOD_ID_H

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace qpecost {

enum class MethodId {
    qdrift,
    rand_hamiltonian,
    taylor_naive,
    taylor_on_the_fly,
    configuration_interaction,
    low_depth_trotter,
    low_depth_taylor_naive,
    low_depth_taylor_on_the_fly,
    linear_t,
    sparsity_low_rank,
    interaction_picture,
};

inline constexpr std::array<MethodId, 11> kAllMethods{
    MethodId::qdrift,
    MethodId::rand_hamiltonian,
    MethodId::taylor_naive,
    MethodId::taylor_on_the_fly,
    MethodId::configuration_interaction,
    MethodId::low_depth_trotter,
    MethodId::low_depth_taylor_naive,
    MethodId::low_depth_taylor_on_the_fly,
    MethodId::linear_t,
    MethodId::sparsity_low_rank,
    MethodId::interaction_picture,
};

std::string_view method_name(MethodId m);
std::optional<MethodId> parse_method(std::string_view name);

/// Comma-separated list of every identifier, for error messages.
std::string method_names_joined();

/// True for estimators working in the plane-wave (dual) basis, whose mode
/// count is derived from the Gaussian count by a multiplier.
bool uses_plane_waves(MethodId m);

}  // namespace qpecost

#endif
