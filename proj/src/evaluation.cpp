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

#include "symnet/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "symnet/error.hpp"
#include "symnet/parallel.hpp"

namespace symnet::stylometry {

EvaluationReport loocv(const ClassifierSpec& spec, const FeatureMatrix& features,
                       unsigned threads) {
  const auto n = features.values.rows;
  if (n < 2) throw InvalidArgument("leave-one-out needs at least 2 rows");
  if (features.authors.size() != n) throw InvalidArgument("author labels do not match rows");

  EvaluationReport report;
  report.spec = spec;
  report.total = n;
  report.predictions.assign(n, {});
  parallel_for(n, threads, [&](std::size_t held_out) {
    Matrix train(n - 1, features.values.cols);
    std::vector<std::string> labels;
    labels.reserve(n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == held_out) continue;
      std::copy(features.values.row(i).begin(), features.values.row(i).end(),
                train.row(r++).begin());
      labels.push_back(features.authors[i]);
    }
    Matrix test(1, features.values.cols);
    std::copy(features.values.row(held_out).begin(), features.values.row(held_out).end(),
              test.row(0).begin());
    report.predictions[held_out] = train_predict(spec, train, labels, test).front();
  });

  report.labels = features.authors;
  std::sort(report.labels.begin(), report.labels.end());
  report.labels.erase(std::unique(report.labels.begin(), report.labels.end()),
                      report.labels.end());
  const auto index = [&](const std::string& label) {
    return static_cast<std::size_t>(
        std::lower_bound(report.labels.begin(), report.labels.end(), label) -
        report.labels.begin());
  };
  report.confusion.assign(report.labels.size(), std::vector<std::size_t>(report.labels.size(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    ++report.confusion[index(features.authors[i])][index(report.predictions[i])];
    if (report.predictions[i] == features.authors[i]) ++report.correct;
  }
  report.accuracy = static_cast<double>(report.correct) / static_cast<double>(n);
  report.p_value =
      binomial_p_value(report.correct, n, 1.0 / static_cast<double>(report.labels.size()));
  return report;
}

double binomial_p_value(std::size_t correct, std::size_t n, double chance) {
  if (correct > n) throw InvalidArgument("binomial_p_value: correct > n");
  if (!(chance > 0.0 && chance < 1.0)) throw InvalidArgument("binomial_p_value: chance not in (0,1)");
  if (correct == 0) return 1.0;
  const double log_p = std::log(chance);
  const double log_q = std::log1p(-chance);
  const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
  std::vector<double> terms;
  terms.reserve(n - correct + 1);
  for (std::size_t k = correct; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double log_choose =
        lgn - std::lgamma(kk + 1.0) - std::lgamma(static_cast<double>(n - k) + 1.0);
    terms.push_back(log_choose + kk * log_p + static_cast<double>(n - k) * log_q);
  }
  const double top = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (auto t : terms) s += std::exp(t - top);
  return std::min(1.0, std::exp(top + std::log(s)));
}

std::string report_to_json(const EvaluationReport& report,
                           const std::vector<std::string>& book_ids) {
  nlohmann::ordered_json spec{
      {"classifier", std::string(to_string(report.spec.kind))},
      {"k", report.spec.k},
      {"svm_c", report.spec.svm_c},
      {"svm_epochs", report.spec.svm_epochs},
      {"mlp_hidden", report.spec.mlp_hidden},
      {"mlp_learning_rate", report.spec.mlp_learning_rate},
      {"mlp_epochs", report.spec.mlp_epochs},
      {"seed", report.spec.seed},
  };
  nlohmann::ordered_json predictions = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.predictions.size(); ++i) {
    predictions.push_back({{"book_id", i < book_ids.size() ? book_ids[i] : std::to_string(i)},
                           {"predicted", report.predictions[i]}});
  }
  nlohmann::ordered_json doc{
      {"accuracy", report.accuracy},
      {"correct", report.correct},
      {"total", report.total},
      {"labels", report.labels},
      {"confusion", report.confusion},
      {"p_value", report.p_value},
      {"predictions", std::move(predictions)},
      {"spec", std::move(spec)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace symnet::stylometry
