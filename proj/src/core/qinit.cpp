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

#include "core/qinit.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/rng.hpp"

namespace qgc {

namespace {

struct Search {
  const HardwareGraph& hw;
  int k;
  int qstates;
  int qubits;
  // goals grouped per qstate for incremental objective deltas
  std::vector<std::vector<int>> partners;  // qstate idx -> partner qstate idxs
  std::vector<int> pos;                    // qstate idx -> qubit
  std::vector<int> occ;                    // qubit -> qstate idx or -1

  long long objective() const {
    long long total = 0;
    for (int s = 0; s < qstates; ++s) {
      for (int p : partners[s]) {
        if (p > s) total += hw.distance(pos[s], pos[p]);
      }
    }
    return total;
  }

  // Objective change if qstate s moved from pos[s] to qubit q (partner t, if
  // any, assumed simultaneously moving to pos[s] in a swap).
  long long delta_for(int s, int q, int swap_partner) const {
    long long d = 0;
    for (int p : partners[s]) {
      const int p_at = (p == swap_partner) ? pos[s] : pos[p];
      d += hw.distance(q, p_at) - hw.distance(pos[s], pos[p]);
    }
    return d;
  }

  void apply_swap(int s1, int s2) {
    std::swap(pos[s1], pos[s2]);
    occ[pos[s1]] = s1;
    occ[pos[s2]] = s2;
  }

  void apply_move(int s, int q) {
    occ[pos[s]] = -1;
    pos[s] = q;
    occ[q] = s;
  }
};

struct Move {
  bool is_swap;
  int a;  // qstate
  int b;  // qstate (swap) or qubit (move)
};

}  // namespace

long long qi_objective(const HardwareGraph& hardware, const Placement& placement,
                       const std::vector<QStatePair>& ps_goals) {
  long long total = 0;
  for (const auto& [s1, s2] : ps_goals) {
    total += hardware.distance(placement.qubit_of(s1), placement.qubit_of(s2));
  }
  return total;
}

QiSolution solve_qi(const QiProblem& problem, std::uint64_t seed, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("qinit budget must be positive");

  const int n = problem.start_placement.vertex_count();
  const int k = problem.start_placement.color_count();
  const int qstates = n * k;
  const int qubits = problem.hardware.qubit_count();

  Search search{problem.hardware, k, qstates, qubits, {}, problem.start_placement.raw(), {}};
  search.partners.assign(qstates, {});
  for (const auto& [s1, s2] : problem.ps_goals) {
    search.partners[qstate_index(s1, k)].push_back(qstate_index(s2, k));
    search.partners[qstate_index(s2, k)].push_back(qstate_index(s1, k));
  }
  search.occ.assign(qubits, -1);
  for (int s = 0; s < qstates; ++s) search.occ[search.pos[s]] = s;

  std::vector<int> empty_qubits;
  for (int q = 0; q < qubits; ++q) {
    if (search.occ[q] < 0) empty_qubits.push_back(q);
  }

  long long current_obj = search.objective();
  std::vector<int> best_pos = search.pos;
  long long best_obj = current_obj;
  Tick current_path_cost = 0;
  Tick best_path_cost = 0;

  std::mt19937_64 rng(seed);
  const int perturbation_moves = std::max(2, qstates / 3);

  for (std::uint64_t iter = 0; iter < budget; ++iter) {
    // Steepest descent: best strictly improving move; ties broken by the
    // lowest (qstate id, qstate-or-qubit id) in enumeration order.
    Move best_move{false, -1, -1};
    long long best_delta = 0;
    Tick best_move_cost = 0;
    for (int s1 = 0; s1 < qstates; ++s1) {
      for (int s2 = s1 + 1; s2 < qstates; ++s2) {
        const long long d =
            search.delta_for(s1, search.pos[s2], s2) + search.delta_for(s2, search.pos[s1], s1);
        if (d < best_delta) {
          best_delta = d;
          const int dist = search.hw.distance(search.pos[s1], search.pos[s2]);
          best_move = {true, s1, s2};
          best_move_cost = static_cast<Tick>(2 * dist - 1) * problem.costs.swap;
        }
      }
      for (int q : empty_qubits) {
        const long long d = search.delta_for(s1, q, -1);
        if (d < best_delta) {
          best_delta = d;
          best_move = {false, s1, q};
          best_move_cost =
              static_cast<Tick>(search.hw.distance(search.pos[s1], q)) * problem.costs.swap;
        }
      }
    }

    if (best_delta < 0) {
      if (best_move.is_swap) {
        search.apply_swap(best_move.a, best_move.b);
      } else {
        for (int& q : empty_qubits) {
          if (q == best_move.b) q = search.pos[best_move.a];
        }
        search.apply_move(best_move.a, best_move.b);
      }
      current_obj += best_delta;
      current_path_cost += best_move_cost;
      if (current_obj < best_obj) {
        best_obj = current_obj;
        best_pos = search.pos;
        best_path_cost = current_path_cost;
      }
      continue;
    }

    // Local optimum: perturb with a few random exchanges and keep searching.
    for (int p = 0; p < perturbation_moves; ++p) {
      const int s1 = static_cast<int>(uniform_below(rng, qstates));
      int s2 = static_cast<int>(uniform_below(rng, qstates - 1));
      if (s2 >= s1) ++s2;
      const int dist = search.hw.distance(search.pos[s1], search.pos[s2]);
      current_path_cost += static_cast<Tick>(2 * dist - 1) * problem.costs.swap;
      search.apply_swap(s1, s2);
    }
    current_obj = search.objective();
  }

  Placement final(n, k, std::move(best_pos), qubits);
  const Tick plan_cost =
      best_path_cost + static_cast<Tick>(problem.ps_goals.size()) * problem.costs.ps;
  return QiSolution{std::move(final), plan_cost, best_obj};
}

}  // namespace qgc
