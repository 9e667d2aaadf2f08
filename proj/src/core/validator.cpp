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

#include "core/validator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

namespace qgc {

std::string to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::resource_overlap: return "RESOURCE_OVERLAP";
    case ViolationCode::not_adjacent: return "NOT_ADJACENT";
    case ViolationCode::ordering: return "ORDERING";
    case ViolationCode::duplicate_goal: return "DUPLICATE_GOAL";
    case ViolationCode::not_empty: return "NOT_EMPTY";
    case ViolationCode::unknown_operand: return "UNKNOWN_OPERAND";
    case ViolationCode::goal_unachieved: return "GOAL_UNACHIEVED";
    case ViolationCode::bad_duration: return "BAD_DURATION";
  }
  return "?";
}

bool ValidationReport::has(ViolationCode code) const { return count(code) > 0; }

int ValidationReport::count(ViolationCode code) const {
  int c = 0;
  for (const auto& v : violations) c += (v.code == code);
  return c;
}

namespace {

struct PendingEffect {
  Tick end;
  long seq;        // replay order, breaks end-time ties deterministically
  int gate_index;  // original index, for messages
  GateKind kind;
  int q1 = -1, q2 = -1;  // the gate's qubits (MOVE: source, target)
  int s1 = -1, s2 = -1;  // operand qstate indices (MOVE: s2 = -1)
  int ps_goal = -1;      // goal achieved at end, if any
  int mix_goal = -1;

  bool operator>(const PendingEffect& other) const {
    return std::tie(end, seq) > std::tie(other.end, other.seq);
  }
};

struct Replay {
  const RoutingProblem& problem;
  const ValidationOptions& options;
  std::vector<Violation>& violations;

  int n, k, qstates, qubits;
  std::vector<int> pos;  // qstate idx -> qubit
  std::vector<int> occ;  // qubit -> qstate idx or -1
  std::vector<Tick> busy_until;
  std::vector<int> busy_gate;  // last gate index holding the qubit
  std::vector<char> ps_achieved, mix_achieved;
  std::vector<Tick> ps_end, mix_end;  // end time of the achieving gate
  std::vector<int> ps_left;           // unachieved ps goals per qstate
  std::vector<Tick> ps_last_end;      // latest ps achievement end per qstate
  std::priority_queue<PendingEffect, std::vector<PendingEffect>, std::greater<>> pending;
  // Gates currently in flight (for the strict adjacency option).
  std::map<long, PendingEffect> running;

  explicit Replay(const RoutingProblem& p, const ValidationOptions& opt,
                  std::vector<Violation>& out)
      : problem(p), options(opt), violations(out) {
    n = p.vertex_count();
    k = p.color_count();
    qstates = p.qstate_count();
    qubits = p.hardware().qubit_count();
    pos.resize(qstates);
    occ.assign(qubits, -1);
    for (int s = 0; s < qstates; ++s) {
      pos[s] = p.initial_placement().qubit_of_index(s);
      occ[pos[s]] = s;
    }
    busy_until.assign(qubits, 0);
    busy_gate.assign(qubits, -1);
    ps_achieved.assign(p.goals().ps_goals.size(), 0);
    mix_achieved.assign(p.goals().mix_goals.size(), 0);
    ps_end.assign(p.goals().ps_goals.size(), 0);
    mix_end.assign(p.goals().mix_goals.size(), 0);
    ps_left.assign(qstates, 0);
    ps_last_end.assign(qstates, 0);
    for (const auto& [a, b] : p.goals().ps_goals) {
      ++ps_left[qstate_index(a, k)];
      ++ps_left[qstate_index(b, k)];
    }
  }

  void add(ViolationCode code, int gate, std::string message) {
    violations.push_back({code, gate, std::move(message)});
  }

  bool ps_completed(int s, Tick at) const { return ps_left[s] == 0 && ps_last_end[s] <= at; }

  void apply_effects_until(Tick t) {
    while (!pending.empty() && pending.top().end <= t) {
      const PendingEffect e = pending.top();
      pending.pop();
      running.erase(e.seq);
      if (relocates(e.kind)) {
        if (e.kind == GateKind::move) {
          occ[e.q1] = -1;
          occ[e.q2] = e.s1;
          pos[e.s1] = e.q2;
        } else {
          std::swap(occ[e.q1], occ[e.q2]);
          pos[e.s1] = (occ[e.q1] == e.s1) ? e.q1 : e.q2;
          pos[e.s2] = (occ[e.q1] == e.s2) ? e.q1 : e.q2;
        }
      }
      if (e.ps_goal >= 0 && !ps_achieved[e.ps_goal]) {
        ps_achieved[e.ps_goal] = 1;
        ps_end[e.ps_goal] = e.end;
        const auto& [a, b] = problem.goals().ps_goals[e.ps_goal];
        for (int s : {qstate_index(a, k), qstate_index(b, k)}) {
          --ps_left[s];
          ps_last_end[s] = std::max(ps_last_end[s], e.end);
        }
      }
      if (e.mix_goal >= 0 && !mix_achieved[e.mix_goal]) {
        mix_achieved[e.mix_goal] = 1;
        mix_end[e.mix_goal] = e.end;
      }
    }
  }

  std::string describe(const QState& s) const {
    return "psi_" + std::to_string(s.vertex) + "_" + std::to_string(s.color);
  }

  void check_gate(int index, const ScheduledGate& g, long seq) {
    const QState s1 = g.qstates.front();
    const int i1 = qstate_index(s1, k);
    PendingEffect effect{g.end(), seq, index, g.kind, -1, -1, i1, -1, -1, -1};

    if (g.kind == GateKind::move) {
      effect.q1 = pos[i1];
      effect.q2 = *g.target_qubit;
    } else {
      const QState s2 = g.qstates[1];
      effect.s2 = qstate_index(s2, k);
      effect.q1 = pos[i1];
      effect.q2 = pos[effect.s2];
    }

    // Operand qubits must be distinct and coupled.
    if (effect.q1 == effect.q2) {
      add(ViolationCode::not_adjacent, index, "gate operands occupy the same qubit");
      return;
    }
    if (!problem.hardware().coupled(effect.q1, effect.q2)) {
      add(ViolationCode::not_adjacent, index,
          "qubits " + std::to_string(effect.q1) + " and " + std::to_string(effect.q2) +
              " are not coupled");
    }

    // Resource exclusivity over [start, end).
    for (int q : {effect.q1, effect.q2}) {
      if (busy_until[q] > g.start) {
        add(ViolationCode::resource_overlap, index,
            "qubit " + std::to_string(q) + " still busy with gate " +
                std::to_string(busy_gate[q]) + " until " + format_units(busy_until[q]));
      }
    }
    if (options.strict_adjacent_exclusion) {
      for (const auto& [_, run] : running) {
        for (int q : {effect.q1, effect.q2}) {
          for (int rq : {run.q1, run.q2}) {
            if (problem.hardware().coupled(q, rq)) {
              add(ViolationCode::resource_overlap, index,
                  "concurrent gates on adjacent qubits " + std::to_string(q) + " and " +
                      std::to_string(rq) + " (strict mode)");
            }
          }
        }
      }
    }

    switch (g.kind) {
      case GateKind::ps: {
        const QState s2 = g.qstates[1];
        const int goal = problem.goals().ps_goal_index(s1, s2);
        if (goal < 0) {
          add(ViolationCode::not_adjacent, index,
              "no PS goal between " + describe(s1) + " and " + describe(s2) +
                  " (same-color problem-graph edge required)");
        } else if (ps_achieved[goal]) {
          add(ViolationCode::duplicate_goal, index,
              "PS goal " + describe(s1) + "," + describe(s2) + " already achieved");
        } else {
          effect.ps_goal = goal;
        }
        break;
      }
      case GateKind::swap_ps: {
        const QState s2 = g.qstates[1];
        const int goal = problem.goals().ps_goal_index(s1, s2);
        // On a non-goal pair this is a plain swap.
        if (goal >= 0) {
          if (ps_achieved[goal]) {
            add(ViolationCode::duplicate_goal, index,
                "PS goal " + describe(s1) + "," + describe(s2) + " already achieved");
          } else {
            effect.ps_goal = goal;
          }
        }
        break;
      }
      case GateKind::mix:
      case GateKind::swap_mix: {
        const QState s2 = g.qstates[1];
        const int goal = problem.goals().mix_goal_index(s1, s2);
        if (goal < 0) {
          add(ViolationCode::not_adjacent, index,
              describe(s1) + " and " + describe(s2) + " are not a mix-graph edge pair");
        } else {
          for (const QState& s : {s1, s2}) {
            if (!ps_completed(qstate_index(s, k), g.start)) {
              add(ViolationCode::ordering, index,
                  "MIX involving " + describe(s) + " before all its PS goals completed");
            }
          }
          if (mix_achieved[goal]) {
            add(ViolationCode::duplicate_goal, index,
                "MIX goal " + describe(s1) + "," + describe(s2) + " already achieved");
          } else {
            effect.mix_goal = goal;
          }
        }
        break;
      }
      case GateKind::swap_mix_as_swap: {
        const QState s2 = g.qstates[1];
        if (!same_mixgraph(s1, s2, problem.mix())) {
          add(ViolationCode::not_adjacent, index,
              describe(s1) + " and " + describe(s2) +
                  " do not share a vertex without a mix-graph edge");
        } else if (!options.relaxed_swap_mix_as_swap) {
          for (const QState& s : {s1, s2}) {
            if (!ps_completed(qstate_index(s, k), g.start)) {
              add(ViolationCode::ordering, index,
                  "swap-only mix variant involving " + describe(s) +
                      " before all its PS goals completed");
            }
          }
        }
        break;
      }
      case GateKind::move: {
        if (occ[effect.q2] >= 0) {
          add(ViolationCode::not_empty, index,
              "MOVE target qubit " + std::to_string(effect.q2) + " is occupied by " +
                  describe(qstate_from_index(occ[effect.q2], k)));
        }
        break;
      }
      case GateKind::swap:
        break;
    }

    for (int q : {effect.q1, effect.q2}) {
      busy_until[q] = std::max(busy_until[q], g.end());
      busy_gate[q] = index;
    }
    running.emplace(seq, effect);
    pending.push(effect);
  }
};

// Schedule-order canonicalization: the report must not depend on the input
// gate order for valid schedules.
std::vector<int> replay_order(const std::vector<ScheduledGate>& gates,
                              const std::vector<char>& replayable) {
  std::vector<int> order;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (replayable[i]) order.push_back(static_cast<int>(i));
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ga = gates[a];
    const auto& gb = gates[b];
    auto key = [](const ScheduledGate& g) {
      QState x = g.qstates.empty() ? QState{-1, -1} : g.qstates.front();
      QState y = g.qstates.size() > 1 ? g.qstates[1] : QState{-1, -1};
      if (y < x) std::swap(x, y);
      return std::tuple(g.start, g.end(), g.kind, x, y, g.target_qubit.value_or(-1));
    };
    return key(ga) < key(gb);
  });
  return order;
}

}  // namespace

ValidationReport validate(const RoutingProblem& problem, const Schedule& schedule,
                          const ValidationOptions& options) {
  ValidationReport report;
  report.makespan = schedule.makespan();

  const int n = problem.vertex_count();
  const int k = problem.color_count();
  const GateDurations& durations = problem.hardware().durations();

  // Shape pass: operand arity and identity, duration table conformance.
  std::vector<char> replayable(schedule.gates.size(), 1);
  for (std::size_t i = 0; i < schedule.gates.size(); ++i) {
    const auto& g = schedule.gates[i];
    const int index = static_cast<int>(i);
    const std::size_t want_operands = g.kind == GateKind::move ? 1 : 2;
    if (g.qstates.size() != want_operands) {
      report.violations.push_back({ViolationCode::unknown_operand, index,
                                   to_string(g.kind) + " expects " +
                                       std::to_string(want_operands) + " operand(s), got " +
                                       std::to_string(g.qstates.size())});
      replayable[i] = 0;
      continue;
    }
    bool known = true;
    for (const auto& s : g.qstates) {
      if (s.vertex < 0 || s.vertex >= n || s.color < 0 || s.color >= k) {
        report.violations.push_back({ViolationCode::unknown_operand, index,
                                     "qstate (" + std::to_string(s.vertex) + "," +
                                         std::to_string(s.color) + ") is not in the instance"});
        known = false;
      }
    }
    if (g.kind == GateKind::move) {
      if (!g.target_qubit || *g.target_qubit < 0 ||
          *g.target_qubit >= problem.hardware().qubit_count()) {
        report.violations.push_back(
            {ViolationCode::unknown_operand, index, "MOVE requires a valid target qubit"});
        known = false;
      }
    } else if (g.target_qubit) {
      report.violations.push_back(
          {ViolationCode::unknown_operand, index, "target qubit is only valid on MOVE"});
    }
    if (g.qstates.size() == 2 && g.qstates[0] == g.qstates[1]) {
      report.violations.push_back(
          {ViolationCode::unknown_operand, index, "gate operands must be distinct"});
      known = false;
    }
    if (g.start < 0) {
      report.violations.push_back(
          {ViolationCode::bad_duration, index, "gate start time is negative"});
      known = false;
    }
    if (g.duration != duration_of(g.kind, durations)) {
      report.violations.push_back(
          {ViolationCode::bad_duration, index,
           to_string(g.kind) + " duration " + format_units(g.duration) +
               " does not match the table value " +
               format_units(duration_of(g.kind, durations))});
    }
    if (!known) replayable[i] = 0;
  }

  Replay replay(problem, options, report.violations);
  long seq = 0;
  for (int index : replay_order(schedule.gates, replayable)) {
    const auto& g = schedule.gates[index];
    replay.apply_effects_until(g.start);
    replay.check_gate(index, g, seq++);
  }
  replay.apply_effects_until(std::numeric_limits<Tick>::max());

  // DonePS markers from parsed plans: accepted, but must sit at or after the
  // completion of every PS goal of their qstate.
  for (const auto& marker : schedule.done_ps_markers) {
    const QState s = marker.qstate;
    if (s.vertex < 0 || s.vertex >= n || s.color < 0 || s.color >= k) {
      report.violations.push_back({ViolationCode::unknown_operand, -1,
                                   "DonePS marker names unknown qstate (" +
                                       std::to_string(s.vertex) + "," +
                                       std::to_string(s.color) + ")"});
      continue;
    }
    const int si = qstate_index(s, k);
    if (replay.ps_left[si] != 0 || replay.ps_last_end[si] > marker.time) {
      report.violations.push_back({ViolationCode::ordering, -1,
                                   "DonePS marker for " + replay.describe(s) + " at " +
                                       format_units(marker.time) +
                                       " precedes completion of its PS goals"});
    }
  }

  for (std::size_t i = 0; i < problem.goals().ps_goals.size(); ++i) {
    if (!replay.ps_achieved[i]) {
      const auto& [a, b] = problem.goals().ps_goals[i];
      report.violations.push_back({ViolationCode::goal_unachieved, -1,
                                   "PS goal " + replay.describe(a) + "," + replay.describe(b) +
                                       " not achieved"});
    } else {
      report.achieved_ps.push_back(problem.goals().ps_goals[i]);
    }
  }
  for (std::size_t i = 0; i < problem.goals().mix_goals.size(); ++i) {
    if (!replay.mix_achieved[i]) {
      const auto& [a, b] = problem.goals().mix_goals[i];
      report.violations.push_back({ViolationCode::goal_unachieved, -1,
                                   "MIX goal " + replay.describe(a) + "," + replay.describe(b) +
                                       " not achieved"});
    } else {
      report.achieved_mix.push_back(problem.goals().mix_goals[i]);
    }
  }

  report.final_positions = replay.pos;
  report.ok = report.violations.empty();
  return report;
}

Tick lower_bound(const RoutingProblem& problem) {
  const int k = problem.color_count();
  const GateDurations& d = problem.hardware().durations();
  const Tick ps_cost = std::min(d.ps, d.swap_ps);
  const Tick mix_cost = std::min(d.mix, d.swap_mix);
  std::vector<int> ps_count(problem.qstate_count(), 0);
  std::vector<int> mix_count(problem.qstate_count(), 0);
  for (const auto& [a, b] : problem.goals().ps_goals) {
    ++ps_count[qstate_index(a, k)];
    ++ps_count[qstate_index(b, k)];
  }
  for (const auto& [a, b] : problem.goals().mix_goals) {
    ++mix_count[qstate_index(a, k)];
    ++mix_count[qstate_index(b, k)];
  }
  Tick bound = 0;
  for (int s = 0; s < problem.qstate_count(); ++s) {
    bound = std::max(bound, ps_count[s] * ps_cost + mix_count[s] * mix_cost);
  }
  return bound;
}

}  // namespace qgc
