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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symnet/features.hpp"

namespace symnet::stylometry {

enum class ClassifierKind { svm, mlp, knn, nby };

std::string_view to_string(ClassifierKind kind);
ClassifierKind parse_classifier(std::string_view name);

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::svm;
  // KNN
  int k = 1;
  // Linear SVM, one-vs-rest: 0.5 |w|^2 + C * mean hinge, scaled as Pegasos.
  double svm_c = 1.0;
  int svm_epochs = 200;
  // MLP: logistic hidden layer, softmax output, summed cross-entropy.
  int mlp_hidden = 20;
  double mlp_learning_rate = 0.01;
  int mlp_epochs = 500;
  std::uint64_t seed = 42;
};

// z-scores columns with statistics from the rows it was fitted on. Columns
// with zero spread are centered but not scaled.
class Standardizer {
 public:
  void fit(const Matrix& x);
  void apply(Matrix& x) const;
  void apply(std::span<double> row) const;
  const std::vector<double>& mean() const { return mean_; }
  const std::vector<double>& scale() const { return scale_; }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

class Classifier {
 public:
  virtual ~Classifier() = default;
  // Labels are class indices in [0, classes).
  virtual void fit(const Matrix& x, std::span<const int> labels, int classes) = 0;
  virtual int predict(std::span<const double> row) const = 0;
};

std::unique_ptr<Classifier> make_classifier(const ClassifierSpec& spec);

// Standardizes with training statistics, fits, and labels each test row.
// Throws InvalidArgument for an empty training set or mismatched widths.
std::vector<std::string> train_predict(const ClassifierSpec& spec, const Matrix& train,
                                       std::span<const std::string> train_labels,
                                       const Matrix& test);

}  // namespace symnet::stylometry
