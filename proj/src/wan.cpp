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

#include "symnet/wan.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "symnet/error.hpp"
#include "symnet/io.hpp"

namespace symnet {

WordNetwork WordNetwork::from_parts(std::vector<std::string> lemmas,
                                    std::vector<std::uint64_t> frequencies,
                                    std::span<const WeightedEdge> edges) {
  const std::size_t n = lemmas.size();
  if (!frequencies.empty() && frequencies.size() != n) {
    throw InvalidArgument("frequency count does not match lemma count");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return lemmas[x] < lemmas[y]; });
  std::vector<NodeId> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = static_cast<NodeId>(r);

  WordNetwork net;
  net.lemmas_.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && lemmas[order[r]] == lemmas[order[r - 1]]) {
      throw InvalidArgument("duplicate lemma '" + lemmas[order[r]] + "'");
    }
    net.lemmas_.push_back(std::move(lemmas[order[r]]));
  }
  if (!frequencies.empty()) {
    net.frequency_.resize(n);
    for (std::size_t r = 0; r < n; ++r) net.frequency_[r] = frequencies[order[r]];
  }

  std::map<std::pair<NodeId, NodeId>, std::uint64_t> merged;
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n) throw InvalidArgument("edge endpoint out of range");
    if (e.a == e.b) throw InvalidArgument("self-loop on '" + net.lemmas_[rank[e.a]] + "'");
    if (e.weight == 0) throw InvalidArgument("edge weight must be positive");
    auto a = rank[e.a];
    auto b = rank[e.b];
    if (a > b) std::swap(a, b);
    merged[{a, b}] += e.weight;
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [key, w] : merged) {
    ++degree[key.first];
    ++degree[key.second];
  }
  net.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) net.offsets_[v + 1] = net.offsets_[v] + degree[v];
  net.neighbors_.resize(net.offsets_[n]);
  net.weights_.resize(net.offsets_[n]);
  std::vector<std::size_t> fill(net.offsets_.begin(), net.offsets_.end() - 1);
  // `merged` is ordered by (a, b): filling the smaller endpoints first and the
  // larger ones second leaves every neighbor list sorted.
  for (const auto& [key, w] : merged) {
    net.neighbors_[fill[key.second]] = key.first;
    net.weights_[fill[key.second]++] = static_cast<std::uint32_t>(w);
  }
  for (const auto& [key, w] : merged) {
    net.neighbors_[fill[key.first]] = key.second;
    net.weights_[fill[key.first]++] = static_cast<std::uint32_t>(w);
  }
  return net;
}

std::optional<NodeId> WordNetwork::find(std::string_view lemma) const {
  auto it = std::lower_bound(lemmas_.begin(), lemmas_.end(), lemma);
  if (it == lemmas_.end() || *it != lemma) return std::nullopt;
  return static_cast<NodeId>(it - lemmas_.begin());
}

std::uint64_t WordNetwork::strength(NodeId v) const {
  std::uint64_t s = 0;
  for (auto w : weights(v)) s += w;
  return s;
}

std::vector<WeightedEdge> WordNetwork::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    auto nb = neighbors(v);
    auto w = weights(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] > v) out.push_back({v, nb[i], w[i]});
    }
  }
  return out;
}

namespace wan {
namespace {

std::uint32_t parse_weight(std::string_view s, std::size_t line_no) {
  std::uint32_t w = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
  if (ec != std::errc() || ptr != s.data() + s.size() || w == 0) {
    throw FormatError("edge list line " + std::to_string(line_no) + ": bad weight '" +
                      std::string(s) + "'");
  }
  return w;
}

}  // namespace

WordNetwork build_wan(std::span<const corpus::Token> tokens, bool cross_sentence_edges) {
  std::unordered_map<std::string_view, std::uint32_t> index;
  std::vector<std::string> lemmas;
  std::vector<std::uint64_t> freq;
  std::vector<std::uint32_t> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] = index.try_emplace(t.lemma, static_cast<std::uint32_t>(lemmas.size()));
    if (inserted) {
      lemmas.push_back(t.lemma);
      freq.push_back(0);
    }
    ++freq[it->second];
    ids.push_back(it->second);
  }
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (!cross_sentence_edges && tokens[i].sentence_index != tokens[i + 1].sentence_index) {
      continue;
    }
    if (ids[i] == ids[i + 1]) continue;
    edges.push_back({ids[i], ids[i + 1], 1});
  }
  return WordNetwork::from_parts(std::move(lemmas), std::move(freq), edges);
}

std::vector<std::string> shared_vocabulary(std::span<const WordNetwork* const> networks) {
  if (networks.empty()) return {};
  // Lemma lists are already sorted, so a running set_intersection suffices.
  std::vector<std::string> shared = networks.front()->lemmas();
  for (std::size_t i = 1; i < networks.size() && !shared.empty(); ++i) {
    std::vector<std::string> next;
    const auto& other = networks[i]->lemmas();
    std::set_intersection(shared.begin(), shared.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    shared = std::move(next);
  }
  return shared;
}

std::vector<std::string> shared_vocabulary(std::span<const WordNetwork> networks) {
  std::vector<const WordNetwork*> ptrs;
  for (const auto& n : networks) ptrs.push_back(&n);
  return shared_vocabulary(std::span<const WordNetwork* const>(ptrs));
}

std::string to_edge_list(const WordNetwork& net) {
  std::string out;
  // Ids follow lemma order, so edges() is already lexicographic on (a, b).
  for (const auto& e : net.edges()) {
    out += net.lemma(e.a);
    out += '\t';
    out += net.lemma(e.b);
    out += '\t';
    out += std::to_string(e.weight);
    out += '\n';
  }
  return out;
}

WordNetwork parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::string> lemmas;
  std::vector<WeightedEdge> edges;
  auto intern = [&](std::string_view s) {
    auto [it, inserted] = index.try_emplace(std::string(s), static_cast<std::uint32_t>(lemmas.size()));
    if (inserted) lemmas.emplace_back(s);
    return it->second;
  };
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": expected lemma_a<TAB>lemma_b<TAB>weight");
    }
    auto a = line.substr(0, t1);
    auto b = line.substr(t1 + 1, t2 - t1 - 1);
    if (a.empty() || b.empty() || a == b) {
      throw FormatError("edge list line " + std::to_string(line_no) + ": bad endpoints");
    }
    auto w = parse_weight(line.substr(t2 + 1), line_no);
    auto ia = intern(a);
    auto ib = intern(b);
    edges.push_back({ia, ib, w});
  }
  return WordNetwork::from_parts(std::move(lemmas), {}, edges);
}

void export_network(const WordNetwork& net, const std::filesystem::path& path) {
  io::write_file_atomic(path, to_edge_list(net));
}

WordNetwork import_network(const std::filesystem::path& path) {
  return parse_edge_list(io::read_file(path));
}

std::string to_json(const WordNetwork& net) {
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId v = 0; v < net.node_count(); ++v) {
    nlohmann::json node{{"lemma", net.lemma(v)}};
    node["freq"] = net.has_frequencies() ? nlohmann::json(net.frequency(v)) : nlohmann::json();
    nodes.push_back(std::move(node));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : net.edges()) edges.push_back({e.a, e.b, e.weight});
  nlohmann::json doc{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  return doc.dump() + "\n";
}

WordNetwork parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    std::vector<std::string> lemmas;
    std::vector<std::uint64_t> freq;
    bool have_freq = true;
    for (const auto& node : doc.at("nodes")) {
      lemmas.push_back(node.at("lemma").get<std::string>());
      if (node.contains("freq") && !node["freq"].is_null()) {
        freq.push_back(node["freq"].get<std::uint64_t>());
      } else {
        have_freq = false;
      }
    }
    if (!have_freq) freq.clear();
    std::vector<WeightedEdge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw FormatError("network JSON: edge must be [i,j,w]");
      edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>(), e[2].get<std::uint32_t>()});
    }
    return WordNetwork::from_parts(std::move(lemmas), std::move(freq), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("network JSON: ") + ex.what());
  }
}

void export_json(const WordNetwork& net, const std::filesystem::path& path) {
  io::write_file_atomic(path, to_json(net));
}

WordNetwork load_network(const std::filesystem::path& path) {
  if (path.extension() == ".json") return parse_json(io::read_file(path));
  return import_network(path);
}

}  // namespace wan
}  // namespace symnet
