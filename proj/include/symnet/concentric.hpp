// Copyright 2026 The symnet Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "symnet/wan.hpp"

namespace symnet::concentric {

enum class SymmetryKind { backbone, merged };

std::string_view to_string(SymmetryKind kind);
// Accepts "backbone" or "merged"; throws InvalidArgument otherwise.
SymmetryKind parse_kind(std::string_view name);

using Edge = std::pair<NodeId, NodeId>;

// Node-centered subgraph of everything within h hops of `center`.
//
// levels[r] holds the nodes at shortest-path distance r (levels[0] is the
// center); trailing levels may be empty when the component is shallow.
// intra_edges[r] are the edges inside levels[r] (r = 0..h) and inter_edges[r]
// join levels[r] to levels[r + 1] (r = 0..h-1), stored as (inner, outer).
// Node lists are sorted by id and edge lists lexicographically.
struct ConcentricPattern {
  NodeId center = 0;
  int h = 1;
  std::vector<std::vector<NodeId>> levels;
  std::vector<std::vector<Edge>> intra_edges;
  std::vector<std::vector<Edge>> inter_edges;
};

// A weighted link from super-node `inner` at level r to `outer` at r + 1.
struct SuperLink {
  std::size_t inner = 0;
  std::size_t outer = 0;
  std::uint32_t weight = 1;

  bool operator==(const SuperLink&) const = default;
};

// Backbone or merged version of a pattern. super_nodes[r] partitions
// levels[r]; each super-node lists its members sorted by id, and super-nodes
// are ordered by their smallest member. dead_end_count[r] (r = 0..h-1) counts
// super-nodes at level r with no link to level r + 1.
struct TransformedPattern {
  SymmetryKind kind = SymmetryKind::backbone;
  NodeId center = 0;
  int h = 1;
  std::vector<std::vector<std::vector<NodeId>>> super_nodes;
  std::vector<std::vector<SuperLink>> weighted_inter_edges;
  std::vector<std::size_t> dead_end_count;
};

// One terminal outcome of the outward walk: a dead-end super-node at level
// r < h, or a super-node at level h.
struct Outcome {
  int level = 0;
  std::size_t super_node = 0;
  double mass = 0.0;
  bool dead_end = false;
};

struct TransitionDistribution {
  std::vector<Outcome> terminal_mass;

  double total() const;
};

struct SymmetryValue {
  NodeId node = 0;
  SymmetryKind kind = SymmetryKind::backbone;
  int h = 1;
  // Empty for isolated nodes, which have no walk at all.
  std::optional<double> value;

  bool defined() const { return value.has_value(); }
};

// Throws InvalidArgument for an unknown center or h < 1.
ConcentricPattern extract_pattern(const WordNetwork& net, NodeId center, int h);

TransformedPattern backbone_transform(const ConcentricPattern& p);
TransformedPattern merged_transform(const ConcentricPattern& p);
TransformedPattern transform(const ConcentricPattern& p, SymmetryKind kind);

// Sweeps levels outward from the center (mass 1). Each super-node splits its
// mass over its outgoing links in proportion to weight; one without outgoing
// links is a dead end and keeps its mass. Level-h super-nodes are terminal.
TransitionDistribution propagate(const TransformedPattern& tp);

// exp(H) / (|level-h super-nodes| + sum of dead ends), H the Shannon entropy
// of the terminal masses. Empty when there is no outward walk (the center has
// no neighbors).
std::optional<double> symmetry_of(const TransformedPattern& tp);

// Single-node symmetry. Throws InvalidArgument for unknown nodes or h < 1.
SymmetryValue symmetry(const WordNetwork& net, NodeId node, int h, SymmetryKind kind);

// Symmetry of every node, indexed by node id. Identical for any thread count
// (0 means all available cores).
std::vector<SymmetryValue> symmetry_all(const WordNetwork& net, int h, SymmetryKind kind,
                                        unsigned threads = 0);

struct SymmetryPair {
  std::optional<double> backbone;
  std::optional<double> merged;
};

// Both kinds from one sweep (the BFS is shared).
std::vector<SymmetryPair> symmetry_all_kinds(const WordNetwork& net, int h, unsigned threads = 0);

// Symmetry of selected nodes only, in the order given.
std::vector<SymmetryPair> symmetry_of_nodes(const WordNetwork& net, std::span<const NodeId> nodes,
                                            int h, unsigned threads = 0);

// Per-center evaluator with reusable scratch space; one instance per thread.
// Computes the same quantities as extract_pattern + transform + propagate
// without materializing the pattern.
class SymmetryEngine {
 public:
  explicit SymmetryEngine(const WordNetwork& net);

  struct Result {
    std::optional<double> backbone;
    std::optional<double> merged;
  };

  // When `backbone_masses` / `merged_masses` are non-null they receive the
  // terminal masses in sweep order.
  Result evaluate(NodeId center, int h, bool want_backbone, bool want_merged,
                  std::vector<double>* backbone_masses = nullptr,
                  std::vector<double>* merged_masses = nullptr);

 private:
  NodeId find_root(NodeId v);

  const WordNetwork& net_;
  std::uint32_t epoch_ = 0;
  // (epoch << 32) | distance; nodes with another epoch are outside the pattern.
  std::vector<std::uint64_t> tag_;
  std::vector<double> mass_;
  std::vector<double> merged_mass_;
  std::vector<std::uint32_t> out_count_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> order_;
  std::vector<std::size_t> level_begin_;
};

}  // namespace symnet::concentric
