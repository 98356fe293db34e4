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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symnet/wan.hpp"

namespace symnet::netstats {

// Per-node values of one classical measurement, indexed by node id.
struct MeasurementVector {
  std::string name;
  std::vector<double> values;
};

// degree, strength, clustering, betweenness, closeness, pagerank,
// eigenvector, avg_neighbor_degree.
std::span<const std::string_view> supported_measurements();

// Everything except strength works on the unweighted topology.
//
//   clustering   local coefficient, 0 for degree < 2
//   betweenness  unnormalized count over unordered pairs (Brandes)
//   closeness    (reachable - 1) / sum of distances within the component,
//                0 for isolated nodes
//   pagerank     damping 0.85, L1 tolerance 1e-10, dangling mass spread
//                uniformly
//   eigenvector  power iteration on A + I (same eigenvectors as A, but no
//                oscillation on bipartite graphs), unit L2 norm
//
// Throws InvalidArgument for names outside supported_measurements().
MeasurementVector compute_measurement(const WordNetwork& net, std::string_view name);

}  // namespace symnet::netstats
