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

#include "gtest/gtest.h"

#include "qpecost/errors.h"

using namespace qpecost;

TEST(synthesis_time, examples) {
    SurfaceCodeConfig one{1e-4, 1};
    SurfaceCodeConfig ten{1e-4, 10};
    ASSERT_EQ(synthesis_time(TCount(0), one), 0);
    ASSERT_DOUBLE_EQ(synthesis_time(TCount(1e6), one), 100);
    ASSERT_DOUBLE_EQ(synthesis_time(TCount(1e6), ten), 10);
}

TEST(synthesis_time, linear_in_count_and_inverse_in_factories) {
    SurfaceCodeConfig cfg{2.5e-5, 4};
    for (double t : {1.0, 3.0, 1e12, 7.7e40}) {
        ASSERT_EQ(synthesis_time(TCount(2 * t), cfg), 2 * synthesis_time(TCount(t), cfg));
        SurfaceCodeConfig doubled{cfg.t_per_magic_state_seconds, 2 * cfg.factories};
        ASSERT_EQ(synthesis_time(TCount(t), doubled), synthesis_time(TCount(t), cfg) / 2);
    }
}

TEST(synthesis_time, rejects_bad_config) {
    ASSERT_THROW(synthesis_time(TCount(1), SurfaceCodeConfig{0, 1}), InputError);
    ASSERT_THROW(synthesis_time(TCount(1), SurfaceCodeConfig{1e-4, 0}), InputError);
    ASSERT_THROW(synthesis_time(TCount(-1), SurfaceCodeConfig{}), InputError);
}
