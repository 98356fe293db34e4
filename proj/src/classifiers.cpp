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

#include "symnet/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "symnet/error.hpp"
#include "symnet/kernels.hpp"

namespace symnet::stylometry {
namespace {

// k nearest neighbors, Euclidean. Distance ties are ordered by class so the
// result does not depend on training-row order.
class KnnClassifier final : public Classifier {
 public:
  explicit KnnClassifier(int k) : k_(static_cast<std::size_t>(std::max(1, k))) {}

  void fit(const Matrix& x, std::span<const int> labels, int classes) override {
    x_ = x;
    labels_.assign(labels.begin(), labels.end());
    classes_ = classes;
  }

  int predict(std::span<const double> row) const override {
    std::vector<std::pair<double, int>> nearest(x_.rows);
    for (std::size_t i = 0; i < x_.rows; ++i) {
      nearest[i] = {simd::squared_distance(row, x_.row(i)), labels_[i]};
    }
    const auto k = std::min(k_, nearest.size());
    std::partial_sort(nearest.begin(), nearest.begin() + static_cast<std::ptrdiff_t>(k),
                      nearest.end());
    std::vector<int> votes(static_cast<std::size_t>(classes_), 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[static_cast<std::size_t>(nearest[i].second)];
    const int best = *std::max_element(votes.begin(), votes.end());
    // Ties go to the tied class owning the single nearest neighbor.
    for (std::size_t i = 0; i < k; ++i) {
      if (votes[static_cast<std::size_t>(nearest[i].second)] == best) return nearest[i].second;
    }
    return nearest.front().second;
  }

 private:
  std::size_t k_;
  Matrix x_;
  std::vector<int> labels_;
  int classes_ = 0;
};

// Gaussian naive Bayes with class-frequency priors.
class NaiveBayesClassifier final : public Classifier {
 public:
  static constexpr double kVarianceFloor = 1e-9;

  void fit(const Matrix& x, std::span<const int> labels, int classes) override {
    const auto d = x.cols;
    const auto c = static_cast<std::size_t>(classes);
    mean_ = Matrix(c, d);
    var_ = Matrix(c, d);
    log_prior_.assign(c, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> count(c, 0);
    for (std::size_t i = 0; i < x.rows; ++i) {
      const auto y = static_cast<std::size_t>(labels[i]);
      ++count[y];
      simd::axpy(1.0, x.row(i), mean_.row(y));
    }
    for (std::size_t y = 0; y < c; ++y) {
      if (count[y] == 0) continue;
      for (auto& m : mean_.row(y)) m /= static_cast<double>(count[y]);
      log_prior_[y] = std::log(static_cast<double>(count[y]) / static_cast<double>(x.rows));
    }
    for (std::size_t i = 0; i < x.rows; ++i) {
      const auto y = static_cast<std::size_t>(labels[i]);
      for (std::size_t j = 0; j < d; ++j) {
        const double diff = x(i, j) - mean_(y, j);
        var_(y, j) += diff * diff;
      }
    }
    for (std::size_t y = 0; y < c; ++y) {
      for (std::size_t j = 0; j < d; ++j) {
        const double v = count[y] > 0 ? var_(y, j) / static_cast<double>(count[y]) : 0.0;
        var_(y, j) = std::max(v, kVarianceFloor);
      }
    }
  }

  int predict(std::span<const double> row) const override {
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < log_prior_.size(); ++y) {
      if (!std::isfinite(log_prior_[y])) continue;
      double score = log_prior_[y];
      for (std::size_t j = 0; j < row.size(); ++j) {
        const double diff = row[j] - mean_(y, j);
        score -= 0.5 * (std::log(2.0 * M_PI * var_(y, j)) + diff * diff / var_(y, j));
      }
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(y);
      }
    }
    return best;
  }

 private:
  Matrix mean_;
  Matrix var_;
  std::vector<double> log_prior_;
};

// One-vs-rest linear SVM. Each binary problem minimizes
//   lambda/2 |w|^2 + mean_i max(0, 1 - y_i (w . x_i)),  lambda = 1 / (C n)
// with full-batch Pegasos steps 1/(lambda t), projection onto the ball of
// radius 1/sqrt(lambda), and the best iterate kept. x carries a constant 1 so
// w includes the bias.
class LinearSvmClassifier final : public Classifier {
 public:
  LinearSvmClassifier(double c, int epochs) : c_(c), epochs_(std::max(1, epochs)) {}

  void fit(const Matrix& x, std::span<const int> labels, int classes) override {
    const auto n = x.rows;
    const auto d = x.cols + 1;
    Matrix xa(n, d);
    for (std::size_t i = 0; i < n; ++i) {
      std::copy(x.row(i).begin(), x.row(i).end(), xa.row(i).begin());
      xa(i, d - 1) = 1.0;
    }
    weights_ = Matrix(static_cast<std::size_t>(classes), d);
    const double lambda = 1.0 / (c_ * static_cast<double>(n));
    const double radius = 1.0 / std::sqrt(lambda);
    std::vector<double> w(d), grad(d), margins(n);
    for (int cls = 0; cls < classes; ++cls) {
      std::fill(w.begin(), w.end(), 0.0);
      double best_objective = std::numeric_limits<double>::infinity();
      auto best = weights_.row(static_cast<std::size_t>(cls));
      for (int t = 1; t <= epochs_ + 1; ++t) {
        double hinge = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double y = labels[i] == cls ? 1.0 : -1.0;
          margins[i] = y * simd::dot(w, xa.row(i));
          hinge += std::max(0.0, 1.0 - margins[i]);
        }
        const double objective = 0.5 * lambda * simd::dot(w, w) + hinge / static_cast<double>(n);
        if (objective < best_objective) {
          best_objective = objective;
          std::copy(w.begin(), w.end(), best.begin());
        }
        if (t > epochs_) break;
        // grad = lambda w - (1/n) sum_{margin < 1} y_i x_i
        for (std::size_t j = 0; j < d; ++j) grad[j] = lambda * w[j];
        for (std::size_t i = 0; i < n; ++i) {
          if (margins[i] < 1.0) {
            const double y = labels[i] == cls ? 1.0 : -1.0;
            simd::axpy(-y / static_cast<double>(n), xa.row(i), grad);
          }
        }
        const double eta = 1.0 / (lambda * static_cast<double>(t));
        simd::axpy(-eta, grad, w);
        const double norm = std::sqrt(simd::dot(w, w));
        if (norm > radius) {
          for (auto& v : w) v *= radius / norm;
        }
      }
    }
  }

  int predict(std::span<const double> row) const override {
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    const auto d = row.size();
    for (std::size_t c = 0; c < weights_.rows; ++c) {
      const auto w = weights_.row(c);
      const double score = simd::dot(w.first(d), row) + w[d];
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(c);
      }
    }
    return best;
  }

 private:
  double c_;
  int epochs_;
  Matrix weights_;
};

double logistic(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// One hidden layer of logistic units, softmax output, cross-entropy summed
// over the training set, full-batch gradient descent. Glorot-uniform weights
// from the seed, zero biases.
class MlpClassifier final : public Classifier {
 public:
  MlpClassifier(int hidden, double rate, int epochs, std::uint64_t seed)
      : hidden_(static_cast<std::size_t>(std::max(1, hidden))),
        rate_(rate),
        epochs_(std::max(0, epochs)),
        seed_(seed) {}

  void fit(const Matrix& x, std::span<const int> labels, int classes) override {
    const auto n = x.rows;
    const auto d = x.cols;
    const auto k = static_cast<std::size_t>(classes);
    std::mt19937_64 rng(seed_);
    auto init = [&](Matrix& m, std::size_t fan_in, std::size_t fan_out) {
      const double r = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
      std::uniform_real_distribution<double> dist(-r, r);
      for (auto& v : m.data) v = dist(rng);
    };
    w1_ = Matrix(hidden_, d);
    w2_ = Matrix(k, hidden_);
    init(w1_, d, hidden_);
    init(w2_, hidden_, k);
    b1_.assign(hidden_, 0.0);
    b2_.assign(k, 0.0);

    Matrix g1(hidden_, d), g2(k, hidden_);
    std::vector<double> gb1(hidden_), gb2(k), hid(hidden_), out(k), dout(k), dhid(hidden_);
    for (int epoch = 0; epoch < epochs_; ++epoch) {
      std::fill(g1.data.begin(), g1.data.end(), 0.0);
      std::fill(g2.data.begin(), g2.data.end(), 0.0);
      std::fill(gb1.begin(), gb1.end(), 0.0);
      std::fill(gb2.begin(), gb2.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        forward(x.row(i), hid, out);
        for (std::size_t c = 0; c < k; ++c) {
          dout[c] = out[c] - (labels[i] == static_cast<int>(c) ? 1.0 : 0.0);
          simd::axpy(dout[c], hid, g2.row(c));
          gb2[c] += dout[c];
        }
        for (std::size_t j = 0; j < hidden_; ++j) {
          double back = 0.0;
          for (std::size_t c = 0; c < k; ++c) back += w2_(c, j) * dout[c];
          dhid[j] = back * hid[j] * (1.0 - hid[j]);
          simd::axpy(dhid[j], x.row(i), g1.row(j));
          gb1[j] += dhid[j];
        }
      }
      simd::axpy(-rate_, g1.data, w1_.data);
      simd::axpy(-rate_, g2.data, w2_.data);
      simd::axpy(-rate_, gb1, b1_);
      simd::axpy(-rate_, gb2, b2_);
    }
  }

  int predict(std::span<const double> row) const override {
    std::vector<double> hid(hidden_), out(b2_.size());
    forward(row, hid, out);
    return static_cast<int>(std::max_element(out.begin(), out.end()) - out.begin());
  }

 private:
  void forward(std::span<const double> row, std::vector<double>& hid,
               std::vector<double>& out) const {
    for (std::size_t j = 0; j < hidden_; ++j) hid[j] = logistic(simd::dot(w1_.row(j), row) + b1_[j]);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < out.size(); ++c) {
      out[c] = simd::dot(w2_.row(c), hid) + b2_[c];
      top = std::max(top, out[c]);
    }
    double z = 0.0;
    for (auto& o : out) z += (o = std::exp(o - top));
    for (auto& o : out) o /= z;
  }

  std::size_t hidden_;
  double rate_;
  int epochs_;
  std::uint64_t seed_;
  Matrix w1_, w2_;
  std::vector<double> b1_, b2_;
};

}  // namespace

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::svm: return "svm";
    case ClassifierKind::mlp: return "mlp";
    case ClassifierKind::knn: return "knn";
    case ClassifierKind::nby: return "nby";
  }
  return "?";
}

ClassifierKind parse_classifier(std::string_view name) {
  if (name == "svm") return ClassifierKind::svm;
  if (name == "mlp") return ClassifierKind::mlp;
  if (name == "knn") return ClassifierKind::knn;
  if (name == "nby") return ClassifierKind::nby;
  throw InvalidArgument("unknown classifier '" + std::string(name) + "'");
}

void Standardizer::fit(const Matrix& x) {
  mean_.assign(x.cols, 0.0);
  scale_.assign(x.cols, 1.0);
  if (x.rows == 0) return;
  for (std::size_t i = 0; i < x.rows; ++i) simd::axpy(1.0, x.row(i), mean_);
  for (auto& m : mean_) m /= static_cast<double>(x.rows);
  std::vector<double> ss(x.cols, 0.0);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      const double d = x(i, j) - mean_[j];
      ss[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < x.cols; ++j) {
    const double sd = std::sqrt(ss[j] / static_cast<double>(x.rows));
    scale_[j] = sd > 0.0 ? sd : 1.0;
  }
}

void Standardizer::apply(std::span<double> row) const {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = (row[j] - mean_[j]) / scale_[j];
}

void Standardizer::apply(Matrix& x) const {
  for (std::size_t i = 0; i < x.rows; ++i) apply(x.row(i));
}

std::unique_ptr<Classifier> make_classifier(const ClassifierSpec& spec) {
  switch (spec.kind) {
    case ClassifierKind::knn: return std::make_unique<KnnClassifier>(spec.k);
    case ClassifierKind::nby: return std::make_unique<NaiveBayesClassifier>();
    case ClassifierKind::svm: return std::make_unique<LinearSvmClassifier>(spec.svm_c, spec.svm_epochs);
    case ClassifierKind::mlp:
      return std::make_unique<MlpClassifier>(spec.mlp_hidden, spec.mlp_learning_rate,
                                             spec.mlp_epochs, spec.seed);
  }
  throw InvalidArgument("unknown classifier");
}

std::vector<std::string> train_predict(const ClassifierSpec& spec, const Matrix& train,
                                       std::span<const std::string> train_labels,
                                       const Matrix& test) {
  if (train.rows == 0) throw InvalidArgument("empty training set");
  if (train_labels.size() != train.rows) {
    throw InvalidArgument("training labels do not match training rows");
  }
  if (test.rows > 0 && test.cols != train.cols) {
    throw InvalidArgument("feature dimension mismatch: train " + std::to_string(train.cols) +
                          ", test " + std::to_string(test.cols));
  }
  std::vector<std::string> classes(train_labels.begin(), train_labels.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::vector<int> y(train.rows);
  for (std::size_t i = 0; i < train.rows; ++i) {
    y[i] = static_cast<int>(std::lower_bound(classes.begin(), classes.end(), train_labels[i]) -
                            classes.begin());
  }

  Standardizer standardizer;
  standardizer.fit(train);
  Matrix x = train;
  standardizer.apply(x);
  auto model = make_classifier(spec);
  model->fit(x, y, static_cast<int>(classes.size()));

  std::vector<std::string> out;
  out.reserve(test.rows);
  std::vector<double> row(test.cols);
  for (std::size_t i = 0; i < test.rows; ++i) {
    std::copy(test.row(i).begin(), test.row(i).end(), row.begin());
    standardizer.apply(row);
    out.push_back(classes[static_cast<std::size_t>(model->predict(row))]);
  }
  return out;
}

}  // namespace symnet::stylometry
