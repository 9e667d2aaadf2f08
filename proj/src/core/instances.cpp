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

#include "core/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "core/qinit.hpp"
#include "core/rng.hpp"

namespace qgc {

namespace {

std::vector<VertexPair> grid_couplings(int rows, int cols) {
  std::vector<VertexPair> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int q = r * cols + c;
      if (c + 1 < cols) edges.push_back({q, q + 1});
      if (r + 1 < rows) edges.push_back({q, q + cols});
    }
  }
  return edges;
}

HardwareGraph make_grid(const std::string& name, int rows, int cols) {
  return HardwareGraph(name, rows * cols, grid_couplings(rows, cols));
}

HardwareGraph make_line(const std::string& name, int length) {
  std::vector<VertexPair> edges;
  for (int q = 0; q + 1 < length; ++q) edges.push_back({q, q + 1});
  return HardwareGraph(name, length, std::move(edges));
}

// Aspen-style layout: two octagons, qubits 0..7 and 8..15, joined by two
// couplings between facing corners.
HardwareGraph make_rigetti16() {
  std::vector<VertexPair> edges;
  for (int q = 0; q < 8; ++q) edges.push_back({q, (q + 1) % 8});
  for (int q = 0; q < 8; ++q) edges.push_back({8 + q, 8 + (q + 1) % 8});
  edges.push_back({1, 10});
  edges.push_back({2, 9});
  return HardwareGraph("rigetti-16", 16, std::move(edges));
}

// 12-qubit section of the 16-qubit chip: first octagon plus the facing half
// of the second.
HardwareGraph make_rigetti12() {
  const HardwareGraph full = make_rigetti16();
  std::vector<VertexPair> edges;
  for (const auto& e : full.couplings()) {
    if (e.first < 12 && e.second < 12) edges.push_back(e);
  }
  return HardwareGraph("rigetti-12", 12, std::move(edges));
}

// 20-qubit Tokyo-style coupling map: a 5x4 grid with row, column and
// alternating diagonal couplings.
const std::vector<VertexPair>& tokyo_couplings() {
  static const std::vector<VertexPair> edges = [] {
    std::vector<VertexPair> e;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) e.push_back({r * 5 + c, r * 5 + c + 1});
    }
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 5; ++c) e.push_back({r * 5 + c, (r + 1) * 5 + c});
    }
    const std::vector<VertexPair> diagonals = {{1, 7},   {2, 6},   {3, 9},   {4, 8},
                                               {5, 11},  {6, 10},  {7, 13},  {8, 12},
                                               {11, 17}, {12, 16}, {13, 19}, {14, 18}};
    e.insert(e.end(), diagonals.begin(), diagonals.end());
    return e;
  }();
  return edges;
}

// Induced subgraph on a qubit subset, relabeled to 0..|subset|-1 in ascending
// original order.
HardwareGraph induced_section(const std::string& name,
                              const std::vector<VertexPair>& couplings,
                              const std::vector<int>& keep) {
  std::vector<int> relabel(1 + *std::max_element(keep.begin(), keep.end()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);
  std::vector<VertexPair> edges;
  for (const auto& e : couplings) {
    if (e.first < static_cast<int>(relabel.size()) && e.second < static_cast<int>(relabel.size()) &&
        relabel[e.first] >= 0 && relabel[e.second] >= 0) {
      edges.push_back({relabel[e.first], relabel[e.second]});
    }
  }
  return HardwareGraph(name, static_cast<int>(keep.size()), std::move(edges));
}

HardwareGraph make_ibm(const std::string& name, int qubits) {
  switch (qubits) {
    case 20:
      return HardwareGraph("ibm-20", 20, tokyo_couplings());
    case 16:
      // 4x4 sub-block of the 5x4 map (drops the last column).
      return induced_section(name, tokyo_couplings(),
                             {0, 1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 15, 16, 17, 18});
    case 12:
      // 3x4 sub-block.
      return induced_section(name, tokyo_couplings(),
                             {0, 1, 2, 5, 6, 7, 10, 11, 12, 15, 16, 17});
    default:
      throw std::invalid_argument("unknown ibm section size");
  }
}

}  // namespace

std::string InstanceSpec::label() const {
  return graph_id + (mix_kind == MixKind::ring ? "R" : mix_kind == MixKind::line ? "L" : "C") +
         std::to_string(color_count);
}

ProblemGraph build_graph(const std::string& graph_id) {
  if (graph_id == "G1") {
    return ProblemGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  }
  if (graph_id == "G2") {
    // Stand-in: K4.
    return ProblemGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (graph_id == "G3") {
    // Stand-in: wheel on 5 vertices with the (0,4) spoke removed.
    return ProblemGraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
  }
  if (graph_id == "G4") {
    // Stand-in: 3-regular circulant C8(1,4).
    std::vector<VertexPair> edges;
    for (int v = 0; v < 8; ++v) edges.push_back({v, (v + 1) % 8});
    for (int v = 0; v < 4; ++v) edges.push_back({v, v + 4});
    return ProblemGraph(8, std::move(edges));
  }
  throw std::invalid_argument("unknown graph id: " + graph_id +
                              " (known: G1, G2, G3, G4; custom graphs go through JSON)");
}

MixGraph build_mixgraph(MixKind kind, int color_count) {
  std::vector<VertexPair> edges;
  switch (kind) {
    case MixKind::line:
      if (color_count < 2) throw std::invalid_argument("line mix graph requires k >= 2");
      for (int c = 0; c + 1 < color_count; ++c) edges.push_back({c, c + 1});
      return MixGraph(color_count, MixKind::line, std::move(edges));
    case MixKind::ring:
      if (color_count < 3) throw std::invalid_argument("ring mix graph requires k >= 3");
      for (int c = 0; c < color_count; ++c) edges.push_back({c, (c + 1) % color_count});
      return MixGraph(color_count, MixKind::ring, std::move(edges));
    case MixKind::custom:
      throw std::invalid_argument("custom mix graphs require an explicit edge list");
  }
  throw std::invalid_argument("unknown mix kind");
}

HardwareGraph build_hardware(const std::string& hardware_id) {
  if (hardware_id == "rigetti-12") return make_rigetti12();
  if (hardware_id == "rigetti-16") return make_rigetti16();
  // Bristlecone-style square-lattice patches.
  if (hardware_id == "google-12") return make_grid("google-12", 3, 4);
  if (hardware_id == "google-16") return make_grid("google-16", 4, 4);
  if (hardware_id == "google-20") return make_grid("google-20", 4, 5);
  if (hardware_id == "google-24") return make_grid("google-24", 4, 6);
  if (hardware_id == "ibm-12" || hardware_id == "ibm-16" || hardware_id == "ibm-20") {
    return make_ibm(hardware_id, std::stoi(hardware_id.substr(4)));
  }
  // grid-n-k: k rows (one per color) by n columns (one per vertex).
  auto parse_two = [&](const std::string& prefix) -> std::optional<std::pair<int, int>> {
    if (hardware_id.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = hardware_id.substr(prefix.size());
    const auto dash = rest.find('-');
    if (dash == std::string::npos) return std::nullopt;
    try {
      const int n = std::stoi(rest.substr(0, dash));
      const int k = std::stoi(rest.substr(dash + 1));
      if (n <= 0 || k <= 0) return std::nullopt;
      return std::make_pair(n, k);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (auto nk = parse_two("grid-")) {
    return make_grid(hardware_id, nk->second, nk->first);
  }
  if (auto nk = parse_two("line-")) {
    return make_line(hardware_id, nk->first * nk->second);
  }
  throw std::invalid_argument("unknown hardware id: " + hardware_id);
}

std::vector<std::string> known_hardware_ids() {
  return {"rigetti-12", "rigetti-16", "google-12", "google-16", "google-20",
          "google-24",  "ibm-12",     "ibm-16",    "ibm-20",    "grid-<n>-<k>",
          "line-<n>-<k>"};
}

Placement random_placement(int vertex_count, int color_count, int qubit_count,
                           std::uint64_t seed) {
  const int qstates = vertex_count * color_count;
  if (qstates > qubit_count) {
    throw std::invalid_argument("not enough qubits for a placement");
  }
  std::vector<int> qubits(qubit_count);
  std::iota(qubits.begin(), qubits.end(), 0);
  std::mt19937_64 rng(seed);
  shuffle_pinned(qubits, rng);
  qubits.resize(qstates);
  return Placement(vertex_count, color_count, std::move(qubits), qubit_count);
}

RoutingProblem build_problem(const InstanceSpec& spec, const PlacementSource& source) {
  ProblemGraph graph = build_graph(spec.graph_id);
  MixGraph mix = build_mixgraph(spec.mix_kind, spec.color_count);
  HardwareGraph hardware = build_hardware(spec.hardware_id);
  const std::string label = spec.label() + "@" + spec.hardware_id;

  Placement placement = [&]() -> Placement {
    switch (source.kind) {
      case PlacementSource::Kind::manual:
        if (!source.manual) throw std::invalid_argument("manual placement source without data");
        return *source.manual;
      case PlacementSource::Kind::random:
        return random_placement(graph.vertex_count(), mix.color_count(),
                                hardware.qubit_count(), source.seed);
      case PlacementSource::Kind::qinit: {
        const Placement start = random_placement(graph.vertex_count(), mix.color_count(),
                                                 hardware.qubit_count(), source.seed);
        const GoalSet goals = derive_goals(graph, mix);
        QiProblem qi{hardware, goals.ps_goals, start, QiCosts::from(hardware.durations())};
        return solve_qi(qi, source.seed, source.qinit_budget).final_placement;
      }
    }
    throw std::invalid_argument("unknown placement source");
  }();

  return RoutingProblem(std::move(graph), std::move(mix), std::move(hardware),
                        std::move(placement), label);
}

}  // namespace qgc
