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

#ifndef QPECOST_TCOUNT_H
#define QPECOST_TCOUNT_H

#include <compare>

namespace qpecost {

/// Number of T gates.
///
/// Stored as a double: whole-algorithm counts routinely exceed 2^64 (the
/// configuration-interaction estimates reach ~1e46), so an integer type would
/// overflow. Building-block counts are exact integers well below 2^53.
class TCount {
   public:
    constexpr TCount() = default;
    constexpr explicit TCount(double v) : value_(v) {
    }

    static constexpr TCount from_toffolis(double toffolis) {
        return TCount(4.0 * toffolis);
    }

    constexpr double value() const {
        return value_;
    }

    constexpr TCount &operator+=(TCount o) {
        value_ += o.value_;
        return *this;
    }
    friend constexpr TCount operator+(TCount a, TCount b) {
        return TCount(a.value_ + b.value_);
    }
    friend constexpr TCount operator*(double k, TCount a) {
        return TCount(k * a.value_);
    }
    friend constexpr TCount operator*(TCount a, double k) {
        return TCount(a.value_ * k);
    }
    friend constexpr bool operator==(TCount a, TCount b) = default;
    friend constexpr auto operator<=>(TCount a, TCount b) = default;

   private:
    double value_ = 0.0;
};

}  // namespace qpecost

#endif
