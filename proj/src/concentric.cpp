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

#include "symnet/concentric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symnet/error.hpp"
#include "symnet/parallel.hpp"

namespace symnet::concentric {
namespace {

void check_args(const WordNetwork& net, NodeId center, int h) {
  if (center >= net.node_count()) {
    throw InvalidArgument("unknown node id " + std::to_string(center));
  }
  if (h < 1) throw InvalidArgument("h must be >= 1, got " + std::to_string(h));
}

std::size_t index_in(const std::vector<NodeId>& sorted, NodeId v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                  sorted.begin());
}

// Accumulates -sum p ln p and the outcome count.
struct EntropyAccumulator {
  double entropy = 0.0;
  std::size_t outcomes = 0;
  std::vector<double>* masses = nullptr;

  void add(double p) {
    if (p > 0.0) entropy -= p * std::log(p);
    ++outcomes;
    if (masses != nullptr) masses->push_back(p);
  }
  std::optional<double> value() const {
    if (outcomes == 0) return std::nullopt;
    return std::exp(entropy) / static_cast<double>(outcomes);
  }
};

}  // namespace

std::string_view to_string(SymmetryKind kind) {
  return kind == SymmetryKind::backbone ? "backbone" : "merged";
}

SymmetryKind parse_kind(std::string_view name) {
  if (name == "backbone") return SymmetryKind::backbone;
  if (name == "merged") return SymmetryKind::merged;
  throw InvalidArgument("unknown symmetry kind '" + std::string(name) + "'");
}

double TransitionDistribution::total() const {
  double s = 0.0;
  for (const auto& o : terminal_mass) s += o.mass;
  return s;
}

ConcentricPattern extract_pattern(const WordNetwork& net, NodeId center, int h) {
  check_args(net, center, h);
  ConcentricPattern p;
  p.center = center;
  p.h = h;
  p.levels.assign(static_cast<std::size_t>(h) + 1, {});
  p.intra_edges.assign(static_cast<std::size_t>(h) + 1, {});
  p.inter_edges.assign(static_cast<std::size_t>(h), {});

  std::map<NodeId, int> dist{{center, 0}};
  p.levels[0].push_back(center);
  for (int r = 0; r < h; ++r) {
    for (auto v : p.levels[r]) {
      for (auto u : net.neighbors(v)) {
        if (dist.emplace(u, r + 1).second) p.levels[r + 1].push_back(u);
      }
    }
    std::sort(p.levels[r + 1].begin(), p.levels[r + 1].end());
  }

  for (const auto& [v, dv] : dist) {
    for (auto u : net.neighbors(v)) {
      if (u <= v) continue;
      auto it = dist.find(u);
      if (it == dist.end()) continue;
      const int du = it->second;
      if (du == dv) {
        p.intra_edges[dv].emplace_back(v, u);
      } else if (du == dv + 1) {
        p.inter_edges[dv].emplace_back(v, u);
      } else if (dv == du + 1) {
        p.inter_edges[du].emplace_back(u, v);
      } else {
        throw std::logic_error("BFS levels violated: edge skips a level");
      }
    }
  }
  for (auto& e : p.intra_edges) std::sort(e.begin(), e.end());
  for (auto& e : p.inter_edges) std::sort(e.begin(), e.end());
  return p;
}

namespace {

std::vector<std::size_t> count_dead_ends(const TransformedPattern& tp) {
  std::vector<std::size_t> dead(static_cast<std::size_t>(tp.h), 0);
  for (int r = 0; r < tp.h; ++r) {
    std::vector<bool> has_out(tp.super_nodes[r].size(), false);
    for (const auto& link : tp.weighted_inter_edges[r]) has_out[link.inner] = true;
    dead[r] = static_cast<std::size_t>(std::count(has_out.begin(), has_out.end(), false));
  }
  return dead;
}

}  // namespace

TransformedPattern backbone_transform(const ConcentricPattern& p) {
  TransformedPattern tp;
  tp.kind = SymmetryKind::backbone;
  tp.center = p.center;
  tp.h = p.h;
  for (const auto& level : p.levels) {
    auto& supers = tp.super_nodes.emplace_back();
    for (auto v : level) supers.push_back({v});
  }
  for (int r = 0; r < p.h; ++r) {
    auto& links = tp.weighted_inter_edges.emplace_back();
    for (const auto& [inner, outer] : p.inter_edges[r]) {
      links.push_back({index_in(p.levels[r], inner), index_in(p.levels[r + 1], outer), 1});
    }
  }
  tp.dead_end_count = count_dead_ends(tp);
  return tp;
}

TransformedPattern merged_transform(const ConcentricPattern& p) {
  TransformedPattern tp;
  tp.kind = SymmetryKind::merged;
  tp.center = p.center;
  tp.h = p.h;

  // component[r][i] = super-node index of levels[r][i].
  std::vector<std::vector<std::size_t>> component;
  for (std::size_t r = 0; r < p.levels.size(); ++r) {
    const auto& level = p.levels[r];
    std::vector<std::size_t> parent(level.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : p.intra_edges[r]) {
      auto ra = find(index_in(level, a));
      auto rb = find(index_in(level, b));
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    // Roots are the smallest member index, so numbering roots in order of
    // appearance orders super-nodes by their smallest member.
    std::vector<std::size_t> label(level.size(), SIZE_MAX);
    auto& supers = tp.super_nodes.emplace_back();
    auto& comp = component.emplace_back(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      auto root = find(i);
      if (label[root] == SIZE_MAX) {
        label[root] = supers.size();
        supers.emplace_back();
      }
      comp[i] = label[root];
      supers[comp[i]].push_back(level[i]);
    }
  }
  for (int r = 0; r < p.h; ++r) {
    std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> weight;
    for (const auto& [inner, outer] : p.inter_edges[r]) {
      ++weight[{component[r][index_in(p.levels[r], inner)],
                component[r + 1][index_in(p.levels[r + 1], outer)]}];
    }
    auto& links = tp.weighted_inter_edges.emplace_back();
    for (const auto& [key, w] : weight) links.push_back({key.first, key.second, w});
  }
  tp.dead_end_count = count_dead_ends(tp);
  return tp;
}

TransformedPattern transform(const ConcentricPattern& p, SymmetryKind kind) {
  return kind == SymmetryKind::backbone ? backbone_transform(p) : merged_transform(p);
}

TransitionDistribution propagate(const TransformedPattern& tp) {
  TransitionDistribution dist;
  std::vector<double> mass(tp.super_nodes[0].size(), 0.0);
  if (!mass.empty()) mass[0] = 1.0;
  for (int r = 0; r < tp.h; ++r) {
    const auto& links = tp.weighted_inter_edges[r];
    std::vector<std::uint64_t> out_weight(tp.super_nodes[r].size(), 0);
    for (const auto& l : links) out_weight[l.inner] += l.weight;
    std::vector<double> next(tp.super_nodes[r + 1].size(), 0.0);
    for (const auto& l : links) {
      next[l.outer] += mass[l.inner] * static_cast<double>(l.weight) /
                       static_cast<double>(out_weight[l.inner]);
    }
    for (std::size_t s = 0; s < mass.size(); ++s) {
      if (out_weight[s] == 0) dist.terminal_mass.push_back({r, s, mass[s], true});
    }
    mass = std::move(next);
  }
  for (std::size_t s = 0; s < mass.size(); ++s) {
    dist.terminal_mass.push_back({tp.h, s, mass[s], false});
  }
  return dist;
}

std::optional<double> symmetry_of(const TransformedPattern& tp) {
  if (tp.super_nodes.size() < 2 || tp.super_nodes[1].empty()) return std::nullopt;
  const auto dist = propagate(tp);
  EntropyAccumulator acc;
  for (const auto& o : dist.terminal_mass) acc.add(o.mass);
  std::size_t denominator = tp.super_nodes[static_cast<std::size_t>(tp.h)].size();
  for (auto d : tp.dead_end_count) denominator += d;
  if (denominator != acc.outcomes) {
    throw std::logic_error("dead-end accounting mismatch");
  }
  return acc.value();
}

SymmetryValue symmetry(const WordNetwork& net, NodeId node, int h, SymmetryKind kind) {
  check_args(net, node, h);
  SymmetryEngine engine(net);
  const bool backbone = kind == SymmetryKind::backbone;
  auto r = engine.evaluate(node, h, backbone, !backbone);
  return {node, kind, h, backbone ? r.backbone : r.merged};
}

std::vector<SymmetryValue> symmetry_all(const WordNetwork& net, int h, SymmetryKind kind,
                                        unsigned threads) {
  if (h < 1) throw InvalidArgument("h must be >= 1, got " + std::to_string(h));
  std::vector<SymmetryValue> out(net.node_count());
  const bool backbone = kind == SymmetryKind::backbone;
  parallel_for_with(
      net.node_count(), threads, [&] { return SymmetryEngine(net); },
      [&](SymmetryEngine& engine, std::size_t i) {
        const auto v = static_cast<NodeId>(i);
        auto r = engine.evaluate(v, h, backbone, !backbone);
        out[i] = {v, kind, h, backbone ? r.backbone : r.merged};
      });
  return out;
}

std::vector<SymmetryPair> symmetry_all_kinds(const WordNetwork& net, int h, unsigned threads) {
  std::vector<NodeId> nodes(net.node_count());
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  return symmetry_of_nodes(net, nodes, h, threads);
}

std::vector<SymmetryPair> symmetry_of_nodes(const WordNetwork& net, std::span<const NodeId> nodes,
                                            int h, unsigned threads) {
  if (h < 1) throw InvalidArgument("h must be >= 1, got " + std::to_string(h));
  for (auto v : nodes) check_args(net, v, h);
  std::vector<SymmetryPair> out(nodes.size());
  parallel_for_with(
      nodes.size(), threads, [&] { return SymmetryEngine(net); },
      [&](SymmetryEngine& engine, std::size_t i) {
        auto r = engine.evaluate(nodes[i], h, true, true);
        out[i] = {r.backbone, r.merged};
      });
  return out;
}

SymmetryEngine::SymmetryEngine(const WordNetwork& net)
    : net_(net),
      tag_(net.node_count(), 0),
      mass_(net.node_count(), 0.0),
      merged_mass_(net.node_count(), 0.0),
      out_count_(net.node_count(), 0),
      parent_(net.node_count(), 0) {}

NodeId SymmetryEngine::find_root(NodeId v) {
  while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
  return v;
}

SymmetryEngine::Result SymmetryEngine::evaluate(NodeId center, int h, bool want_backbone,
                                                bool want_merged,
                                                std::vector<double>* backbone_masses,
                                                std::vector<double>* merged_masses) {
  if (center >= net_.node_count()) {
    throw InvalidArgument("unknown node id " + std::to_string(center));
  }
  if (h < 1) throw InvalidArgument("h must be >= 1, got " + std::to_string(h));
  if (++epoch_ == 0) {
    std::fill(tag_.begin(), tag_.end(), 0);
    epoch_ = 1;
  }
  const std::uint64_t stamp = static_cast<std::uint64_t>(epoch_) << 32;
  // Tag of a node visited this round at distance d.
  const auto at = [stamp](int d) { return stamp | static_cast<std::uint32_t>(d); };
  if (backbone_masses != nullptr) backbone_masses->clear();
  if (merged_masses != nullptr) merged_masses->clear();

  auto visit = [&](NodeId v, int d) {
    tag_[v] = at(d);
    mass_[v] = 0.0;
    merged_mass_[v] = 0.0;
    out_count_[v] = 0;
    parent_[v] = v;
    order_.push_back(v);
  };
  auto in_pattern = [&](NodeId u) { return (tag_[u] & ~0xffffffffull) == stamp; };

  order_.clear();
  level_begin_.clear();
  level_begin_.push_back(0);
  visit(center, 0);
  level_begin_.push_back(1);
  // Level r occupies order_[level_begin_[r], level_begin_[r + 1]).
  for (int r = 0; r < h; ++r) {
    for (auto i = level_begin_[r]; i < level_begin_[r + 1]; ++i) {
      const auto v = order_[i];
      std::uint32_t out = 0;
      const auto next = at(r + 1);
      for (auto u : net_.neighbors(v)) {
        if (!in_pattern(u)) {
          visit(u, r + 1);
          ++out;
        } else if (tag_[u] == next) {
          ++out;
        }
      }
      out_count_[v] = out;
    }
    level_begin_.push_back(order_.size());
  }
  if (level_begin_[2] == level_begin_[1]) return {};  // isolated center

  Result result;
  const auto level_range = [&](int r) {
    return std::pair{level_begin_[r], level_begin_[r + 1]};
  };

  if (want_backbone) {
    EntropyAccumulator acc{0.0, 0, backbone_masses};
    mass_[center] = 1.0;
    for (int r = 0; r < h; ++r) {
      auto [b, e] = level_range(r);
      const auto next = at(r + 1);
      for (auto i = b; i < e; ++i) {
        const auto v = order_[i];
        if (out_count_[v] == 0) {
          acc.add(mass_[v]);
          continue;
        }
        const double share = mass_[v] / out_count_[v];
        for (auto u : net_.neighbors(v)) {
          if (tag_[u] == next) mass_[u] += share;
        }
      }
    }
    auto [b, e] = level_range(h);
    for (auto i = b; i < e; ++i) acc.add(mass_[order_[i]]);
    result.backbone = acc.value();
  }

  if (want_merged) {
    // Union nodes joined inside a level (the center's level is a singleton).
    for (auto i = level_begin_[1]; i < order_.size(); ++i) {
      const auto v = order_[i];
      for (auto u : net_.neighbors(v)) {
        if (u < v && tag_[u] == tag_[v]) {
          auto rv = find_root(v);
          auto ru = find_root(u);
          if (rv != ru) parent_[std::max(rv, ru)] = std::min(rv, ru);
        }
      }
    }
    // Flatten so parent_ holds the component root of every node.
    for (auto i = level_begin_[1]; i < order_.size(); ++i) parent_[order_[i]] = find_root(order_[i]);
    // mass_ doubles as the per-component outgoing edge count here, since the
    // backbone pass is finished with it.
    EntropyAccumulator acc{0.0, 0, merged_masses};
    merged_mass_[center] = 1.0;
    for (int r = 0; r < h; ++r) {
      auto [b, e] = level_range(r);
      const auto next = at(r + 1);
      for (auto i = b; i < e; ++i) mass_[order_[i]] = 0.0;
      for (auto i = b; i < e; ++i) {
        const auto v = order_[i];
        mass_[parent_[v]] += out_count_[v];
      }
      for (auto i = b; i < e; ++i) {
        const auto v = order_[i];
        if (parent_[v] == v && mass_[v] == 0.0) acc.add(merged_mass_[v]);
      }
      for (auto i = b; i < e; ++i) {
        const auto v = order_[i];
        const auto root = parent_[v];
        if (mass_[root] == 0.0) continue;
        const double share = merged_mass_[root] / mass_[root];
        for (auto u : net_.neighbors(v)) {
          if (tag_[u] == next) merged_mass_[parent_[u]] += share;
        }
      }
    }
    auto [b, e] = level_range(h);
    for (auto i = b; i < e; ++i) {
      const auto v = order_[i];
      if (parent_[v] == v) acc.add(merged_mass_[v]);
    }
    result.merged = acc.value();
  }
  return result;
}

}  // namespace symnet::concentric
