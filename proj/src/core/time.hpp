// Copyright 2026 The qgc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

namespace qgc {

/// Time values are fixed-point integers: 1 abstract time unit = 1'000'000
/// ticks. Gate durations and schedule times stay exact under comparison and
/// addition; floating point appears only at serialization boundaries.
using Tick = std::int64_t;

inline constexpr Tick kTicksPerUnit = 1'000'000;

/// Converts a decimal time (in abstract units) to ticks, rounding to the
/// nearest tick. Values beyond 1e-6 of a representable tick grid point are
/// still accepted; the 1e-6 grid is the resolution of the toolkit.
Tick ticks_from_units(double units);

inline constexpr Tick ticks(std::int64_t units) { return units * kTicksPerUnit; }

double units_from_ticks(Tick t);

/// Renders a tick count as a decimal string in abstract units with trailing
/// zeros trimmed ("19", "0.25", "12.000001").
std::string format_units(Tick t);

}  // namespace qgc
