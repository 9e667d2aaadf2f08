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

#include <string>
#include <vector>

#include "core/schedule.hpp"
#include "core/types.hpp"

namespace qgc {

enum class ViolationCode {
  resource_overlap,
  not_adjacent,
  ordering,
  duplicate_goal,
  not_empty,
  unknown_operand,
  goal_unachieved,
  bad_duration,
};

std::string to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  int gate_index;  // -1 when not tied to a gate (goal completion, markers)
  std::string message;
};

struct ValidationOptions {
  /// Some machines forbid concurrent gates on adjacent qubit sets. Off by
  /// default; the benchmark semantics only require disjointness.
  bool strict_adjacent_exclusion = false;
  /// Drop the ps-completion precondition of the swap-only mix variant.
  bool relaxed_swap_mix_as_swap = false;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
  std::vector<QStatePair> achieved_ps;
  std::vector<QStatePair> achieved_mix;
  Tick makespan = 0;
  /// Qstate locations after the full replay (qstate index -> qubit).
  std::vector<int> final_positions;

  bool has(ViolationCode code) const;
  int count(ViolationCode code) const;
};

/// Replays a schedule against the problem and certifies legality: adjacency
/// of operands, resource exclusivity over [start, start+duration), location
/// effects at gate end, goal bookkeeping, PS-before-MIX orderings and goal
/// completion. Never throws on bad schedules; everything is reported as a
/// violation. The makespan is reported regardless of validity.
ValidationReport validate(const RoutingProblem& problem, const Schedule& schedule,
                          const ValidationOptions& options = {});

/// Per-qstate serial workload bound: gates sharing a qstate cannot overlap,
/// so the busiest qstate's cheapest possible goal work lower-bounds every
/// valid schedule's makespan.
Tick lower_bound(const RoutingProblem& problem);

}  // namespace qgc
