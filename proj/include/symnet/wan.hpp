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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symnet/corpus.hpp"

namespace symnet {

using NodeId = std::uint32_t;

struct WeightedEdge {
  NodeId a = 0;  // a < b
  NodeId b = 0;
  std::uint32_t weight = 1;

  bool operator==(const WeightedEdge&) const = default;
};

// Undirected word adjacency network. Node ids follow the lexicographic order of
// lemmas, so two networks with the same lemma set agree on ids. Neighbor lists
// are sorted by id. Immutable once built.
class WordNetwork {
 public:
  WordNetwork() = default;

  // Builds from a lemma list (any order, no duplicates), per-lemma
  // frequencies (empty when unknown) and edges given as lemma indices into
  // `lemmas`. Duplicate edges are summed; self-loops are rejected.
  static WordNetwork from_parts(std::vector<std::string> lemmas,
                                std::vector<std::uint64_t> frequencies,
                                std::span<const WeightedEdge> edges);

  std::size_t node_count() const { return lemmas_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  bool empty() const { return lemmas_.empty(); }

  const std::string& lemma(NodeId v) const { return lemmas_[v]; }
  const std::vector<std::string>& lemmas() const { return lemmas_; }
  std::optional<NodeId> find(std::string_view lemma) const;

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::span<const std::uint32_t> weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::uint64_t strength(NodeId v) const;

  // Occurrence counts are unknown for networks imported from edge lists.
  bool has_frequencies() const { return !frequency_.empty(); }
  std::uint64_t frequency(NodeId v) const { return has_frequencies() ? frequency_[v] : 0; }

  // Every edge once with a < b, sorted by (a, b).
  std::vector<WeightedEdge> edges() const;

  bool operator==(const WordNetwork&) const = default;

 private:
  std::vector<std::string> lemmas_;
  std::vector<std::uint64_t> frequency_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<std::uint32_t> weights_;
};

namespace wan {

// Links consecutive lemmas; pairs straddling a sentence boundary are skipped
// unless `cross_sentence_edges`. Repeated lemmas never form a self-loop.
WordNetwork build_wan(std::span<const corpus::Token> tokens, bool cross_sentence_edges = false);

// Lemmas present in every network, sorted lexicographically.
std::vector<std::string> shared_vocabulary(std::span<const WordNetwork* const> networks);
std::vector<std::string> shared_vocabulary(std::span<const WordNetwork> networks);

// Edge list TSV: `lemma_a<TAB>lemma_b<TAB>weight`, lemma_a < lemma_b, rows
// sorted lexicographically.
std::string to_edge_list(const WordNetwork& net);
WordNetwork parse_edge_list(std::string_view text);
void export_network(const WordNetwork& net, const std::filesystem::path& path);
WordNetwork import_network(const std::filesystem::path& path);

// JSON: {"nodes":[{"lemma":..,"freq":..}], "edges":[[i,j,w],...]}; node
// indices are node ids. `freq` is null when frequencies are unknown.
std::string to_json(const WordNetwork& net);
WordNetwork parse_json(std::string_view text);
void export_json(const WordNetwork& net, const std::filesystem::path& path);

// Loads `.json` via parse_json, anything else as an edge list.
WordNetwork load_network(const std::filesystem::path& path);

}  // namespace wan
}  // namespace symnet
