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

#include "symnet/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symnet/kernels.hpp"

namespace symnet::netstats {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("pearson: length mismatch (" + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
  }
  std::vector<double> cx, cy;
  cx.reserve(x.size());
  cy.reserve(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) continue;
    cx.push_back(x[i]);
    cy.push_back(y[i]);
  }
  if (cx.size() < 2) throw InvalidArgument("pearson: fewer than two defined pairs");
  const double n = static_cast<double>(cx.size());
  const double mx = simd::sum(cx) / n;
  const double my = simd::sum(cy) / n;
  for (auto& v : cx) v -= mx;
  for (auto& v : cy) v -= my;
  const double sxx = simd::dot(cx, cx);
  const double syy = simd::dot(cy, cy);
  if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelation("pearson: zero variance");
  const double r = simd::dot(cx, cy) / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

std::vector<double> Histogram::centers() const {
  std::vector<double> c(bins());
  for (std::size_t i = 0; i < bins(); ++i) c[i] = 0.5 * (edges[i] + edges[i + 1]);
  return c;
}

std::size_t Histogram::populated_bins() const {
  return static_cast<std::size_t>(
      std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
}

Histogram histogram(std::span<const double> values, std::size_t bins) {
  if (bins < 1) throw InvalidArgument("histogram: bins must be >= 1");
  double lo = INFINITY;
  double hi = -INFINITY;
  std::size_t n = 0;
  for (auto v : values) {
    if (std::isnan(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++n;
  }
  if (n == 0) throw InvalidArgument("histogram: no defined values");
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges[bins] = hi;
  h.counts.assign(bins, 0);
  for (auto v : values) {
    if (std::isnan(v)) continue;
    auto idx = static_cast<std::size_t>((v - lo) / width);
    idx = std::min(idx, bins - 1);
    // Rounding can land a value one bin off near an edge.
    while (idx > 0 && v < h.edges[idx]) --idx;
    while (idx + 1 < bins && v >= h.edges[idx + 1]) ++idx;
    ++h.counts[idx];
  }
  h.densities.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    h.densities[i] = static_cast<double>(h.counts[i]) / (static_cast<double>(n) * h.width(i));
  }
  return h;
}

}  // namespace symnet::netstats
