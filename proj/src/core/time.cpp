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

#include "core/time.hpp"

#include <cmath>
#include <stdexcept>

namespace qgc {

Tick ticks_from_units(double units) {
  if (!std::isfinite(units)) {
    throw std::invalid_argument("time value must be finite");
  }
  const double scaled = units * static_cast<double>(kTicksPerUnit);
  return static_cast<Tick>(std::llround(scaled));
}

double units_from_ticks(Tick t) {
  return static_cast<double>(t) / static_cast<double>(kTicksPerUnit);
}

std::string format_units(Tick t) {
  const bool negative = t < 0;
  const Tick abs = negative ? -t : t;
  const Tick whole = abs / kTicksPerUnit;
  Tick frac = abs % kTicksPerUnit;
  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

}  // namespace qgc
