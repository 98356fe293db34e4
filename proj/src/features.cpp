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

#include "symnet/features.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include <fmt/format.h>

#include "symnet/error.hpp"
#include "symnet/parallel.hpp"

namespace symnet::stylometry {

FeatureMatrix build_features(std::span<const BookNetwork> books, concentric::SymmetryKind kind,
                             std::span<const int> levels, unsigned threads) {
  if (books.size() < 2) throw InvalidArgument("need at least 2 books");
  std::set<std::string> authors;
  for (const auto& b : books) authors.insert(b.author);
  if (authors.size() < 2) throw InvalidArgument("need at least 2 authors");
  if (levels.empty()) throw InvalidArgument("need at least one level");
  for (int h : levels) {
    if (h < 1) throw InvalidArgument("levels must be >= 1");
  }

  std::vector<const WordNetwork*> nets;
  for (const auto& b : books) nets.push_back(&b.network);
  const auto vocab = wan::shared_vocabulary(std::span<const WordNetwork* const>(nets));

  // values[(book * L + level) * |vocab| + word]
  const std::size_t nwords = vocab.size();
  const std::size_t nlevels = levels.size();
  std::vector<std::optional<double>> values(books.size() * nlevels * nwords);
  const bool backbone = kind == concentric::SymmetryKind::backbone;
  parallel_for(books.size() * nlevels, threads, [&](std::size_t task) {
    const auto book = task / nlevels;
    const auto level = task % nlevels;
    const auto& net = books[book].network;
    concentric::SymmetryEngine engine(net);
    for (std::size_t w = 0; w < nwords; ++w) {
      const auto id = *net.find(vocab[w]);
      const auto r = engine.evaluate(id, levels[level], backbone, !backbone);
      values[task * nwords + w] = backbone ? r.backbone : r.merged;
    }
  });

  std::vector<std::size_t> kept;
  for (std::size_t w = 0; w < nwords; ++w) {
    bool defined = true;
    for (std::size_t t = 0; t < books.size() * nlevels && defined; ++t) {
      defined = values[t * nwords + w].has_value();
    }
    if (defined) kept.push_back(w);
  }
  if (kept.empty()) throw InvalidArgument("empty shared vocabulary");

  FeatureMatrix fm;
  for (const auto& b : books) {
    fm.book_ids.push_back(b.id);
    fm.authors.push_back(b.author);
  }
  for (std::size_t l = 0; l < nlevels; ++l) {
    for (auto w : kept) {
      fm.columns.push_back(nlevels == 1 ? vocab[w] : fmt::format("{}@{}", vocab[w], levels[l]));
    }
  }
  fm.values = Matrix(books.size(), fm.columns.size());
  for (std::size_t b = 0; b < books.size(); ++b) {
    std::size_t col = 0;
    for (std::size_t l = 0; l < nlevels; ++l) {
      for (auto w : kept) fm.values(b, col++) = *values[(b * nlevels + l) * nwords + w];
    }
  }
  return fm;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string features_to_csv(const FeatureMatrix& features) {
  std::string out = "book_id,author";
  for (const auto& c : features.columns) out += "," + csv_field(c);
  out += '\n';
  for (std::size_t r = 0; r < features.values.rows; ++r) {
    out += csv_field(features.book_ids[r]) + "," + csv_field(features.authors[r]);
    for (auto v : features.values.row(r)) out += fmt::format(",{:.17g}", v);
    out += '\n';
  }
  return out;
}

}  // namespace symnet::stylometry
