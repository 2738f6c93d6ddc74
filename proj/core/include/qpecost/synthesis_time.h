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

#ifndef QPECOST_SYNTHESIS_TIME_H
#define QPECOST_SYNTHESIS_TIME_H

#include "qpecost/tcount.h"

namespace qpecost {

/// Linear magic-state factory model. The defaults are placeholders, not
/// measured rates; override them per architecture.
struct SurfaceCodeConfig {
    double t_per_magic_state_seconds = 1e-4;
    double factories = 1;
};

/// Wall-clock seconds to distil `t_count` T states:
/// t_count * t_per_magic_state / factories.
double synthesis_time(TCount t_count, const SurfaceCodeConfig &cfg);

}  // namespace qpecost

#endif
