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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symnet/classifiers.hpp"
#include "symnet/concentric.hpp"

namespace symnet::cli {

struct RunConfig {
  std::string subcommand;
  std::filesystem::path manifest;
  std::filesystem::path network;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> lemmas;
  std::optional<std::filesystem::path> out;
  int h = 2;
  // Overrides `h` when non-empty.
  std::vector<int> levels;
  concentric::SymmetryKind kind = concentric::SymmetryKind::merged;
  std::size_t bins = 30;
  bool full_form_fit = true;
  stylometry::ClassifierSpec classifier;
  unsigned threads = 0;
  bool cross_sentence = false;
  bool strip_boilerplate = true;
};

// Parses argv and runs the chosen subcommand. Returns the process exit code:
// 0 when every requested output was written, 1 on runtime failure, 2 on usage
// errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Subcommands on an already validated config.
int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_symmetry(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_features(const RunConfig& config, std::ostream& out, std::ostream& err);

// `lemma,degree,frequency,kind,h,symmetry`, one row per node in lemma order;
// undefined values and unknown frequencies are empty fields.
std::string symmetry_csv(const WordNetwork& net, int h, concentric::SymmetryKind kind,
                         unsigned threads);

}  // namespace symnet::cli
