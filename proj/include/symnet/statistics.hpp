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
#include <span>
#include <vector>

#include "symnet/error.hpp"

namespace symnet::netstats {

class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

// Sample Pearson coefficient. NaN entries mark undefined values and are
// dropped pairwise. Throws InvalidArgument on length mismatch or fewer than
// two complete pairs, UndefinedCorrelation when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

// Uniform bins spanning [min, max] of the defined values; densities integrate
// to 1. A degenerate range (all values equal) becomes [v - 0.5, v + 0.5].
struct Histogram {
  std::vector<double> edges;      // bins + 1 entries
  std::vector<double> densities;  // bins entries
  std::vector<std::size_t> counts;

  std::size_t bins() const { return densities.size(); }
  double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
  std::vector<double> centers() const;
  std::size_t populated_bins() const;
};

// NaN entries are ignored. Throws InvalidArgument for bins < 1 or no values.
Histogram histogram(std::span<const double> values, std::size_t bins);

}  // namespace symnet::netstats
