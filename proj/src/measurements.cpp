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

#include "symnet/measurements.hpp"

#include <array>
#include <cmath>
#include <string>

#include "symnet/error.hpp"

namespace symnet::netstats {
namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "degree",    "strength", "clustering", "betweenness",
    "closeness", "pagerank", "eigenvector", "avg_neighbor_degree"};

std::vector<double> degree(const WordNetwork& net) {
  std::vector<double> out(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) out[v] = static_cast<double>(net.degree(v));
  return out;
}

std::vector<double> strength(const WordNetwork& net) {
  std::vector<double> out(net.node_count());
  for (NodeId v = 0; v < net.node_count(); ++v) out[v] = static_cast<double>(net.strength(v));
  return out;
}

std::vector<double> clustering(const WordNetwork& net) {
  const auto n = net.node_count();
  std::vector<double> out(n, 0.0);
  std::vector<NodeId> mark(n, static_cast<NodeId>(-1));
  for (NodeId v = 0; v < n; ++v) {
    const auto k = net.degree(v);
    if (k < 2) continue;
    for (auto u : net.neighbors(v)) mark[u] = v;
    std::size_t links = 0;
    for (auto u : net.neighbors(v)) {
      for (auto w : net.neighbors(u)) {
        if (w > u && mark[w] == v) ++links;
      }
    }
    out[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
  }
  return out;
}

// Brandes' accumulation over BFS shortest-path DAGs.
std::vector<double> betweenness(const WordNetwork& net) {
  const auto n = net.node_count();
  std::vector<double> out(n, 0.0);
  std::vector<NodeId> stack;
  std::vector<int> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    stack.clear();
    queue.assign(1, s);
    dist[s] = 0;
    sigma[s] = 1.0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto v = queue[qi];
      stack.push_back(v);
      for (auto w : net.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const auto w = *it;
      for (auto v : net.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) out[w] += delta[w];
    }
  }
  // Each unordered pair was counted from both endpoints.
  for (auto& b : out) b /= 2.0;
  return out;
}

std::vector<double> closeness(const WordNetwork& net) {
  const auto n = net.node_count();
  std::vector<double> out(n, 0.0);
  std::vector<int> dist(n);
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, s);
    dist[s] = 0;
    double total = 0.0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto v = queue[qi];
      total += dist[v];
      for (auto w : net.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    if (total > 0.0) out[s] = static_cast<double>(queue.size() - 1) / total;
  }
  return out;
}

std::vector<double> pagerank(const WordNetwork& net) {
  constexpr double kDamping = 0.85;
  constexpr double kTolerance = 1e-10;
  constexpr int kMaxIterations = 10000;
  const auto n = net.node_count();
  if (n == 0) return {};
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, uniform), next(n);
  for (int it = 0; it < kMaxIterations; ++it) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (net.degree(v) == 0) dangling += rank[v];
    }
    const double base = (1.0 - kDamping) * uniform + kDamping * dangling * uniform;
    std::fill(next.begin(), next.end(), base);
    for (NodeId v = 0; v < n; ++v) {
      const auto k = net.degree(v);
      if (k == 0) continue;
      const double share = kDamping * rank[v] / static_cast<double>(k);
      for (auto u : net.neighbors(v)) next[u] += share;
    }
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) change += std::abs(next[v] - rank[v]);
    rank.swap(next);
    if (change < kTolerance) break;
  }
  double total = 0.0;
  for (auto r : rank) total += r;
  for (auto& r : rank) r /= total;
  return rank;
}

std::vector<double> eigenvector(const WordNetwork& net) {
  constexpr double kTolerance = 1e-10;
  constexpr int kMaxIterations = 10000;
  const auto n = net.node_count();
  if (n == 0) return {};
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  for (int it = 0; it < kMaxIterations; ++it) {
    for (NodeId v = 0; v < n; ++v) {
      double s = x[v];
      for (auto u : net.neighbors(v)) s += x[u];
      y[v] = s;
    }
    double norm = 0.0;
    for (auto value : y) norm += value * value;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      y[v] /= norm;
      change += std::abs(y[v] - x[v]);
    }
    x.swap(y);
    if (change < kTolerance) break;
  }
  return x;
}

std::vector<double> avg_neighbor_degree(const WordNetwork& net) {
  std::vector<double> out(net.node_count(), 0.0);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    const auto k = net.degree(v);
    if (k == 0) continue;
    double s = 0.0;
    for (auto u : net.neighbors(v)) s += static_cast<double>(net.degree(u));
    out[v] = s / static_cast<double>(k);
  }
  return out;
}

}  // namespace

std::span<const std::string_view> supported_measurements() { return kNames; }

MeasurementVector compute_measurement(const WordNetwork& net, std::string_view name) {
  MeasurementVector m{std::string(name), {}};
  if (name == "degree") {
    m.values = degree(net);
  } else if (name == "strength") {
    m.values = strength(net);
  } else if (name == "clustering") {
    m.values = clustering(net);
  } else if (name == "betweenness") {
    m.values = betweenness(net);
  } else if (name == "closeness") {
    m.values = closeness(net);
  } else if (name == "pagerank") {
    m.values = pagerank(net);
  } else if (name == "eigenvector") {
    m.values = eigenvector(net);
  } else if (name == "avg_neighbor_degree") {
    m.values = avg_neighbor_degree(net);
  } else {
    throw InvalidArgument("unsupported measurement '" + std::string(name) + "'");
  }
  return m;
}

}  // namespace symnet::netstats
