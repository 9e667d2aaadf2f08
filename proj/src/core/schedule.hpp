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

#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace qgc {

enum class GateKind {
  ps,
  mix,
  swap,
  move,
  swap_ps,
  swap_mix,
  swap_mix_as_swap,
};

/// Wire names: PS, MIX, SWAP, MOVE, SWAP_PS, SWAP_MIX, SWAP_MIX_AS_SWAP.
std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& s);

/// The table duration for a kind; the swap-only mix variant runs at the
/// combined gate's duration.
Tick duration_of(GateKind kind, const GateDurations& d);

/// True for kinds that exchange/relocate their operands at gate end.
bool relocates(GateKind kind);

struct ScheduledGate {
  GateKind kind = GateKind::swap;
  std::vector<QState> qstates;       // 2 operands; 1 for MOVE
  std::optional<int> target_qubit;   // MOVE only: destination (empty) qubit
  Tick start = 0;
  Tick duration = 0;

  Tick end() const { return start + duration; }
};

/// Per-qstate completion marker carried by plans parsed from external
/// planners. Never required; checked when present.
struct DonePsMarker {
  QState qstate;
  Tick time = 0;
};

struct Schedule {
  std::vector<ScheduledGate> gates;
  std::vector<DonePsMarker> done_ps_markers;

  Tick makespan() const {
    Tick m = 0;
    for (const auto& g : gates) m = std::max(m, g.end());
    return m;
  }
};

/// Gate-list equality up to reordering (sorted by start/kind/operands).
/// Used by round-trip checks.
bool structurally_equal(const Schedule& a, const Schedule& b);

}  // namespace qgc
