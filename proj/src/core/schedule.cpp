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

#include "core/schedule.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qgc {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::ps: return "PS";
    case GateKind::mix: return "MIX";
    case GateKind::swap: return "SWAP";
    case GateKind::move: return "MOVE";
    case GateKind::swap_ps: return "SWAP_PS";
    case GateKind::swap_mix: return "SWAP_MIX";
    case GateKind::swap_mix_as_swap: return "SWAP_MIX_AS_SWAP";
  }
  throw std::invalid_argument("bad gate kind");
}

GateKind gate_kind_from_string(const std::string& s) {
  if (s == "PS") return GateKind::ps;
  if (s == "MIX") return GateKind::mix;
  if (s == "SWAP") return GateKind::swap;
  if (s == "MOVE") return GateKind::move;
  if (s == "SWAP_PS") return GateKind::swap_ps;
  if (s == "SWAP_MIX") return GateKind::swap_mix;
  if (s == "SWAP_MIX_AS_SWAP") return GateKind::swap_mix_as_swap;
  throw std::invalid_argument("unknown gate kind: " + s);
}

Tick duration_of(GateKind kind, const GateDurations& d) {
  switch (kind) {
    case GateKind::ps: return d.ps;
    case GateKind::mix: return d.mix;
    case GateKind::swap: return d.swap;
    case GateKind::move: return d.move;
    case GateKind::swap_ps: return d.swap_ps;
    case GateKind::swap_mix: return d.swap_mix;
    case GateKind::swap_mix_as_swap: return d.swap_mix;
  }
  throw std::invalid_argument("bad gate kind");
}

bool relocates(GateKind kind) {
  switch (kind) {
    case GateKind::ps:
    case GateKind::mix:
      return false;
    case GateKind::swap:
    case GateKind::move:
    case GateKind::swap_ps:
    case GateKind::swap_mix:
    case GateKind::swap_mix_as_swap:
      return true;
  }
  return false;
}

namespace {
auto gate_key(const ScheduledGate& g) {
  QState a = g.qstates.empty() ? QState{-1, -1} : g.qstates.front();
  QState b = g.qstates.size() > 1 ? g.qstates[1] : QState{-1, -1};
  if (b < a) std::swap(a, b);
  return std::tuple(g.start, g.kind, a, b, g.target_qubit.value_or(-1), g.duration);
}
}  // namespace

bool structurally_equal(const Schedule& a, const Schedule& b) {
  if (a.gates.size() != b.gates.size()) return false;
  std::vector<ScheduledGate> ga = a.gates;
  std::vector<ScheduledGate> gb = b.gates;
  auto by_key = [](const ScheduledGate& x, const ScheduledGate& y) {
    return gate_key(x) < gate_key(y);
  };
  std::sort(ga.begin(), ga.end(), by_key);
  std::sort(gb.begin(), gb.end(), by_key);
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (gate_key(ga[i]) != gate_key(gb[i])) return false;
  }
  return true;
}

}  // namespace qgc
