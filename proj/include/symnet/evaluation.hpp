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
#include <string>
#include <vector>

#include "symnet/classifiers.hpp"
#include "symnet/features.hpp"

namespace symnet::stylometry {

struct EvaluationReport {
  ClassifierSpec spec;
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
  // Row i was predicted by the fold that held out row i.
  std::vector<std::string> predictions;
  // Sorted author labels; confusion[true][predicted] indexes into them.
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> confusion;
  // One-sided binomial test against uniform guessing over `labels`.
  double p_value = 1.0;
};

// Leave-one-out over books; folds run in parallel but each is seeded
// identically, so the report does not depend on `threads`.
EvaluationReport loocv(const ClassifierSpec& spec, const FeatureMatrix& features,
                       unsigned threads = 0);

// P[X >= correct] for X ~ Binomial(n, chance), summed in log space.
double binomial_p_value(std::size_t correct, std::size_t n, double chance);

// {"accuracy", "correct", "total", "labels", "confusion", "predictions",
//  "p_value", "spec"}.
std::string report_to_json(const EvaluationReport& report, const std::vector<std::string>& book_ids);

}  // namespace symnet::stylometry
