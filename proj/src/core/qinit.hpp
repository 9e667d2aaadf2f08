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
#include <vector>

#include "core/types.hpp"

namespace qgc {

/// Action costs for the relaxed (classical, PS-goals-only) initialization
/// problem. Swap-family costs equal the corresponding temporal durations;
/// the PS action costs a flat 1.
struct QiCosts {
  Tick swap = ticks(4);
  Tick swap_ps = ticks(4);
  Tick ps = kTicksPerUnit;  // constant 1

  static QiCosts from(const GateDurations& d) { return {d.swap, d.swap_ps, kTicksPerUnit}; }
};

/// Qubit-initialization problem: find a start placement that brings PS-goal
/// partners close together. MIX goals are deliberately ignored here.
struct QiProblem {
  HardwareGraph hardware;
  std::vector<QStatePair> ps_goals;
  Placement start_placement;
  QiCosts costs;
};

struct QiSolution {
  Placement final_placement;
  /// Implied cost of realizing the accepted relocation moves plus one unit
  /// PS action per goal, in the relaxed problem's cost scale.
  Tick relaxed_plan_cost = 0;
  /// Sum of hardware distances between PS-goal partners under
  /// final_placement. At least |ps_goals| whenever the goal list is
  /// self-loop-free.
  long long objective = 0;
};

/// Sum over ps_goals of the coupling-graph distance between the partners'
/// qubits.
long long qi_objective(const HardwareGraph& hardware, const Placement& placement,
                       const std::vector<QStatePair>& ps_goals);

/// Anytime local search over placements: steepest-descent on qi_objective
/// with moves (a) exchange two qstates' qubits and (b) relocate a qstate to
/// an empty qubit, plus seed-derived perturbation on stagnation. The result
/// never scores worse than the start placement. Deterministic per
/// (seed, budget); budget counts neighborhood scans.
QiSolution solve_qi(const QiProblem& problem, std::uint64_t seed, std::uint64_t budget);

}  // namespace qgc
