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

#include "core/types.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qgc {

namespace {

std::vector<VertexPair> canonicalize_edges(std::vector<VertexPair> edges, int node_count,
                                           const char* what) {
  for (auto& e : edges) {
    if (e.first == e.second) {
      throw std::invalid_argument(std::string(what) + ": self-loop on node " +
                                  std::to_string(e.first));
    }
    if (e.first < 0 || e.second < 0 || e.first >= node_count || e.second >= node_count) {
      throw std::invalid_argument(std::string(what) + ": endpoint out of range");
    }
    e = canonical_pair(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument(std::string(what) + ": duplicate edge");
  }
  return edges;
}

bool sorted_contains(const std::vector<VertexPair>& edges, int a, int b) {
  return std::binary_search(edges.begin(), edges.end(), canonical_pair(a, b));
}

}  // namespace

VertexPair canonical_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

QStatePair canonical_qstate_pair(const QState& a, const QState& b) {
  return a <= b ? QStatePair{a, b} : QStatePair{b, a};
}

ProblemGraph::ProblemGraph(int vertex_count, std::vector<VertexPair> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count <= 0) {
    throw std::invalid_argument("problem graph: vertex count must be positive");
  }
  edges_ = canonicalize_edges(std::move(edges), vertex_count, "problem graph");
}

bool ProblemGraph::has_edge(int u, int v) const { return sorted_contains(edges_, u, v); }

int ProblemGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.first == v) + (e.second == v);
  return d;
}

std::string to_string(MixKind kind) {
  switch (kind) {
    case MixKind::line: return "line";
    case MixKind::ring: return "ring";
    case MixKind::custom: return "custom";
  }
  return "custom";
}

MixKind mix_kind_from_string(const std::string& s) {
  if (s == "line") return MixKind::line;
  if (s == "ring") return MixKind::ring;
  if (s == "custom") return MixKind::custom;
  throw std::invalid_argument("unknown mix-graph kind: " + s);
}

MixGraph::MixGraph(int color_count, MixKind kind, std::vector<VertexPair> edges)
    : color_count_(color_count), kind_(kind) {
  if (color_count <= 0) {
    throw std::invalid_argument("mix graph: color count must be positive");
  }
  edges_ = canonicalize_edges(std::move(edges), color_count, "mix graph");
  if (kind == MixKind::line) {
    // A line must be the path 0-1-...-k-1: exactly k-1 consecutive edges.
    if (static_cast<int>(edges_.size()) != color_count - 1) {
      throw std::invalid_argument("line mix graph must have exactly k-1 edges");
    }
    for (int c = 0; c + 1 < color_count; ++c) {
      if (!sorted_contains(edges_, c, c + 1)) {
        throw std::invalid_argument("line mix graph edges must form the 0-1-...-(k-1) path");
      }
    }
  } else if (kind == MixKind::ring) {
    if (color_count < 3) {
      throw std::invalid_argument("ring mix graph requires k >= 3");
    }
    if (static_cast<int>(edges_.size()) != color_count) {
      throw std::invalid_argument("ring mix graph must have exactly k edges");
    }
    for (int c = 0; c < color_count; ++c) {
      if (!sorted_contains(edges_, c, (c + 1) % color_count)) {
        throw std::invalid_argument("ring mix graph edges must form the k-cycle");
      }
    }
  }
}

bool MixGraph::has_edge(int c1, int c2) const { return sorted_contains(edges_, c1, c2); }

int MixGraph::degree(int color) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.first == color) + (e.second == color);
  return d;
}

void check_durations(const GateDurations& d) {
  for (Tick t : {d.swap, d.move, d.ps, d.swap_ps, d.mix, d.swap_mix}) {
    if (t < 0) throw std::invalid_argument("gate durations must be non-negative");
  }
}

HardwareGraph::HardwareGraph(std::string name, int qubit_count, std::vector<VertexPair> couplings,
                             GateDurations durations)
    : name_(std::move(name)), qubit_count_(qubit_count), durations_(durations) {
  if (qubit_count <= 0) {
    throw std::invalid_argument("hardware: qubit count must be positive");
  }
  check_durations(durations_);
  couplings_ = canonicalize_edges(std::move(couplings), qubit_count, "hardware");
  adjacency_.assign(qubit_count_, {});
  for (const auto& c : couplings_) {
    adjacency_[c.first].push_back(c.second);
    adjacency_[c.second].push_back(c.first);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // All-pairs BFS; doubles as the connectivity check.
  dist_.assign(qubit_count_, std::vector<int>(qubit_count_, -1));
  for (int start = 0; start < qubit_count_; ++start) {
    auto& row = dist_[start];
    row[start] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int q = frontier.front();
      frontier.pop();
      for (int nbr : adjacency_[q]) {
        if (row[nbr] < 0) {
          row[nbr] = row[q] + 1;
          frontier.push(nbr);
        }
      }
    }
    for (int q = 0; q < qubit_count_; ++q) {
      if (row[q] < 0) {
        throw std::invalid_argument("hardware '" + name_ + "' is not connected (qubit " +
                                    std::to_string(q) + " unreachable from " +
                                    std::to_string(start) + ")");
      }
    }
  }
}

bool HardwareGraph::coupled(int q1, int q2) const { return sorted_contains(couplings_, q1, q2); }

const std::vector<int>& HardwareGraph::neighbors(int q) const {
  if (q < 0 || q >= qubit_count_) throw std::out_of_range("qubit index out of range");
  return adjacency_[q];
}

int HardwareGraph::distance(int q1, int q2) const {
  if (q1 < 0 || q1 >= qubit_count_ || q2 < 0 || q2 >= qubit_count_) {
    throw std::out_of_range("qubit index out of range");
  }
  return dist_[q1][q2];
}

HardwareGraph HardwareGraph::with_durations(GateDurations d) const {
  return HardwareGraph(name_, qubit_count_, couplings_, d);
}

namespace {
int pair_lookup(const std::vector<QStatePair>& goals, const QState& a, const QState& b) {
  const QStatePair key = canonical_qstate_pair(a, b);
  const auto it = std::lower_bound(goals.begin(), goals.end(), key);
  if (it != goals.end() && *it == key) return static_cast<int>(it - goals.begin());
  return -1;
}
}  // namespace

bool GoalSet::is_ps_goal(const QState& a, const QState& b) const {
  return pair_lookup(ps_goals, a, b) >= 0;
}
bool GoalSet::is_mix_goal(const QState& a, const QState& b) const {
  return pair_lookup(mix_goals, a, b) >= 0;
}
int GoalSet::ps_goal_index(const QState& a, const QState& b) const {
  return pair_lookup(ps_goals, a, b);
}
int GoalSet::mix_goal_index(const QState& a, const QState& b) const {
  return pair_lookup(mix_goals, a, b);
}

GoalSet derive_goals(const ProblemGraph& graph, const MixGraph& mix) {
  GoalSet goals;
  goals.ps_goals.reserve(graph.edges().size() * mix.color_count());
  for (const auto& e : graph.edges()) {
    for (int c = 0; c < mix.color_count(); ++c) {
      goals.ps_goals.push_back(canonical_qstate_pair({e.first, c}, {e.second, c}));
    }
  }
  goals.mix_goals.reserve(graph.vertex_count() * mix.edges().size());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (const auto& e : mix.edges()) {
      goals.mix_goals.push_back(canonical_qstate_pair({v, e.first}, {v, e.second}));
    }
  }
  std::sort(goals.ps_goals.begin(), goals.ps_goals.end());
  std::sort(goals.mix_goals.begin(), goals.mix_goals.end());
  return goals;
}

bool same_mixgraph(const QState& s1, const QState& s2, const MixGraph& mix) {
  if (s1 == s2) return false;
  if (s1.vertex != s2.vertex) return false;
  return !mix.has_edge(s1.color, s2.color);
}

Placement::Placement(int vertex_count, int color_count, std::vector<int> qubit_of,
                     int qubit_count)
    : vertex_count_(vertex_count),
      color_count_(color_count),
      qubit_count_(qubit_count),
      qubit_of_(std::move(qubit_of)) {
  const std::size_t expected = static_cast<std::size_t>(vertex_count) * color_count;
  if (qubit_of_.size() != expected) {
    throw std::invalid_argument("placement must assign every qstate exactly once");
  }
  std::vector<char> used(qubit_count, 0);
  for (int q : qubit_of_) {
    if (q < 0 || q >= qubit_count) {
      throw std::invalid_argument("placement qubit out of range");
    }
    if (used[q]) {
      throw std::invalid_argument("placement is not injective (qubit " + std::to_string(q) +
                                  " assigned twice)");
    }
    used[q] = 1;
  }
}

RoutingProblem::RoutingProblem(ProblemGraph graph, MixGraph mix, HardwareGraph hardware,
                               Placement initial_placement, std::string label)
    : graph_(std::move(graph)),
      mix_(std::move(mix)),
      hardware_(std::move(hardware)),
      goals_(derive_goals(graph_, mix_)),
      placement_(std::move(initial_placement)),
      label_(std::move(label)) {
  if (qstate_count() > hardware_.qubit_count()) {
    throw std::invalid_argument("instance needs " + std::to_string(qstate_count()) +
                                " qubits but hardware '" + hardware_.name() + "' has " +
                                std::to_string(hardware_.qubit_count()));
  }
  if (placement_.vertex_count() != graph_.vertex_count() ||
      placement_.color_count() != mix_.color_count() ||
      placement_.qubit_count() != hardware_.qubit_count()) {
    throw std::invalid_argument("placement shape does not match instance");
  }
}

std::string RoutingProblem::qstate_name(const QState& s) const {
  return std::to_string(s.vertex) + "_" + std::to_string(s.color);
}

}  // namespace qgc
