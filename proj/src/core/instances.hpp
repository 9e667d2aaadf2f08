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
#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace qgc {

/// Identifies one benchmark configuration, e.g. G1 + ring/3 on rigetti-12
/// (labeled "G1R3"). Custom graphs and machines enter through instance JSON
/// instead of an id.
struct InstanceSpec {
  std::string graph_id = "G1";
  MixKind mix_kind = MixKind::ring;
  int color_count = 3;
  std::string hardware_id = "rigetti-12";

  /// "G1R3", "G2L4", ...
  std::string label() const;
};

/// Where the initial qstate placement comes from.
struct PlacementSource {
  enum class Kind { random, manual, qinit };
  Kind kind = Kind::random;
  std::uint64_t seed = 1;
  std::uint64_t qinit_budget = 2000;
  std::optional<Placement> manual;

  static PlacementSource random(std::uint64_t seed) {
    return {Kind::random, seed, 2000, std::nullopt};
  }
  static PlacementSource qinit(std::uint64_t seed, std::uint64_t budget = 2000) {
    return {Kind::qinit, seed, budget, std::nullopt};
  }
  static PlacementSource from(Placement p) {
    return {Kind::manual, 0, 0, std::move(p)};
  }
};

/// Benchmark graphs G1..G4. G1 is the 4-vertex square; the others are
/// documented stand-ins of the advertised sizes (G2 = K4, G3 = 5-vertex
/// wheel minus one spoke, G4 = the 3-regular circulant C8(1,4)).
ProblemGraph build_graph(const std::string& graph_id);

/// Line (path over colors, k >= 2) or ring (cycle, k >= 3).
MixGraph build_mixgraph(MixKind kind, int color_count);

/// Known machine ids: rigetti-12, rigetti-16, google-12/16/20/24,
/// ibm-12/16/20, grid-<n>-<k>, line-<n>-<k>. The vendor sections are
/// also shipped as JSON under data/hardware/ for reference.
HardwareGraph build_hardware(const std::string& hardware_id);

std::vector<std::string> known_hardware_ids();

/// Uniformly random injective qstate -> qubit assignment, reproducible by
/// seed.
Placement random_placement(int vertex_count, int color_count, int qubit_count,
                           std::uint64_t seed);

RoutingProblem build_problem(const InstanceSpec& spec, const PlacementSource& source);

}  // namespace qgc
