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
#include <string>
#include <vector>

#include "symnet/concentric.hpp"
#include "symnet/wan.hpp"

namespace symnet::stylometry {

// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Books x shared-lemma symmetry values. With several levels the columns are
// grouped by level and labelled `lemma@h`; with one level they are the bare
// lemmas. Values are raw: standardization happens per training fold.
struct FeatureMatrix {
  std::vector<std::string> book_ids;
  std::vector<std::string> authors;
  std::vector<std::string> columns;
  Matrix values;
};

struct BookNetwork {
  std::string id;
  std::string author;
  WordNetwork network;
};

// Computes symmetry of every shared-vocabulary lemma in every book. A lemma
// whose symmetry is undefined in any book (isolated there) is dropped at every
// level. Requires >= 2 books and >= 2 distinct authors; throws InvalidArgument
// when the surviving vocabulary is empty.
FeatureMatrix build_features(std::span<const BookNetwork> books, concentric::SymmetryKind kind,
                             std::span<const int> levels, unsigned threads = 0);

// CSV: `book_id,author,<column>...`; values printed with 17 significant digits.
std::string features_to_csv(const FeatureMatrix& features);

}  // namespace symnet::stylometry
