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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "core/time.hpp"

namespace qgc {

/// Unordered (u, v) pair canonicalized as (min, max). Set membership over
/// edges and couplings is unambiguous everywhere because of this.
using VertexPair = std::pair<int, int>;

VertexPair canonical_pair(int a, int b);

/// The graph to be colored: n vertices, undirected edge set.
class ProblemGraph {
 public:
  ProblemGraph(int vertex_count, std::vector<VertexPair> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;

 private:
  int vertex_count_;
  std::vector<VertexPair> edges_;  // canonical, sorted, unique
};

enum class MixKind { line, ring, custom };

std::string to_string(MixKind kind);
MixKind mix_kind_from_string(const std::string& s);

/// Graph over colors defining which color pairs require MIX gates.
/// A "line" is the path 0-1-...-k-1; a "ring" closes the cycle.
class MixGraph {
 public:
  MixGraph(int color_count, MixKind kind, std::vector<VertexPair> edges);

  int color_count() const { return color_count_; }
  MixKind kind() const { return kind_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  bool has_edge(int c1, int c2) const;
  int degree(int color) const;

 private:
  int color_count_;
  MixKind kind_;
  std::vector<VertexPair> edges_;  // canonical, sorted, unique
};

/// The routed information unit: one vertex-color combination. A problem over
/// n vertices and k colors has exactly n*k of these.
struct QState {
  int vertex = 0;
  int color = 0;

  auto operator<=>(const QState&) const = default;
};

/// Dense index of a qstate within a fixed (n, k) problem: vertex*k + color.
inline int qstate_index(const QState& s, int color_count) {
  return s.vertex * color_count + s.color;
}
inline QState qstate_from_index(int index, int color_count) {
  return QState{index / color_count, index % color_count};
}

/// Unordered qstate pair, canonicalized (lesser operand first).
using QStatePair = std::pair<QState, QState>;

QStatePair canonical_qstate_pair(const QState& a, const QState& b);

/// Per-gate-type durations, uniform across all hardware couplings.
struct GateDurations {
  Tick swap = ticks(4);
  Tick move = ticks(4);
  Tick ps = ticks(3);
  Tick swap_ps = ticks(4);
  Tick mix = ticks(1);
  Tick swap_mix = ticks(1);
};

void check_durations(const GateDurations& d);

/// Physical qubit coupling graph plus the duration table. Construction
/// verifies connectivity and precomputes all-pairs shortest-path distances.
class HardwareGraph {
 public:
  HardwareGraph(std::string name, int qubit_count, std::vector<VertexPair> couplings,
                GateDurations durations = {});

  const std::string& name() const { return name_; }
  int qubit_count() const { return qubit_count_; }
  const std::vector<VertexPair>& couplings() const { return couplings_; }
  const GateDurations& durations() const { return durations_; }

  bool coupled(int q1, int q2) const;
  const std::vector<int>& neighbors(int q) const;

  /// Shortest coupling-path length; 0 iff q1 == q2.
  int distance(int q1, int q2) const;

  HardwareGraph with_durations(GateDurations d) const;

 private:
  std::string name_;
  int qubit_count_;
  std::vector<VertexPair> couplings_;
  GateDurations durations_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> dist_;  // BFS table, filled at construction
};

/// The PS and MIX goal gates an instance requires. Pairs are canonical and
/// the two sets are disjoint by construction (PS pairs share a color, MIX
/// pairs share a vertex).
struct GoalSet {
  std::vector<QStatePair> ps_goals;   // sorted canonical pairs
  std::vector<QStatePair> mix_goals;  // sorted canonical pairs

  bool is_ps_goal(const QState& a, const QState& b) const;
  bool is_mix_goal(const QState& a, const QState& b) const;
  /// Position of the pair in the owning list, or -1.
  int ps_goal_index(const QState& a, const QState& b) const;
  int mix_goal_index(const QState& a, const QState& b) const;
};

/// Enumerates the required goal gates of the idealized circuit:
/// one PS per problem-graph edge per color, one MIX per vertex per
/// mix-graph edge.
GoalSet derive_goals(const ProblemGraph& graph, const MixGraph& mix);

/// True iff the qstates sit in the same per-vertex mix structure (same
/// vertex) but their colors are not joined by a mix-graph edge. Such pairs
/// admit the swap-only variant of the combined swap+mix operation.
bool same_mixgraph(const QState& s1, const QState& s2, const MixGraph& mix);

/// Injective, total assignment qstate -> qubit. Qubits outside the image are
/// empty.
class Placement {
 public:
  /// qubit_of[qstate_index] layout; validates totality, injectivity, range.
  Placement(int vertex_count, int color_count, std::vector<int> qubit_of, int qubit_count);

  int vertex_count() const { return vertex_count_; }
  int color_count() const { return color_count_; }
  int qstate_count() const { return static_cast<int>(qubit_of_.size()); }
  int qubit_count() const { return qubit_count_; }

  int qubit_of(const QState& s) const { return qubit_of_[qstate_index(s, color_count_)]; }
  int qubit_of_index(int qstate_idx) const { return qubit_of_[qstate_idx]; }
  const std::vector<int>& raw() const { return qubit_of_; }

 private:
  int vertex_count_;
  int color_count_;
  int qubit_count_;
  std::vector<int> qubit_of_;
};

/// A complete routing instance: what to color, how colors mix, the machine,
/// the derived goal gates and where every qstate starts.
class RoutingProblem {
 public:
  RoutingProblem(ProblemGraph graph, MixGraph mix, HardwareGraph hardware,
                 Placement initial_placement, std::string label = {});

  const ProblemGraph& graph() const { return graph_; }
  const MixGraph& mix() const { return mix_; }
  const HardwareGraph& hardware() const { return hardware_; }
  const GoalSet& goals() const { return goals_; }
  const Placement& initial_placement() const { return placement_; }
  const std::string& label() const { return label_; }

  int vertex_count() const { return graph_.vertex_count(); }
  int color_count() const { return mix_.color_count(); }
  int qstate_count() const { return graph_.vertex_count() * mix_.color_count(); }

  std::string qstate_name(const QState& s) const;

 private:
  ProblemGraph graph_;
  MixGraph mix_;
  HardwareGraph hardware_;
  GoalSet goals_;
  Placement placement_;
  std::string label_;
};

}  // namespace qgc
