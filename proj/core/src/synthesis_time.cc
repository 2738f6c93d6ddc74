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

#include "qpecost/synthesis_time.h"

#include "qpecost/errors.h"

namespace qpecost {

double synthesis_time(TCount t_count, const SurfaceCodeConfig &cfg) {
    if (!(cfg.t_per_magic_state_seconds > 0.0) || !(cfg.factories > 0.0)) {
        throw InputError("surface-code rate and factory count must be > 0");
    }
    if (t_count.value() < 0.0) {
        throw InputError("T count must be non-negative");
    }
    return t_count.value() * cfg.t_per_magic_state_seconds / cfg.factories;
}

}  // namespace qpecost
