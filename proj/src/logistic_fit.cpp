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

#include "symnet/logistic_fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace symnet::netstats {
namespace {

// Parameter vector: [A1, A2, log S0, log p] or, reduced, [A1, log S0, log p].
struct Model {
  bool full;

  std::size_t size() const { return full ? 4 : 3; }

  LogisticFit unpack(const Eigen::VectorXd& theta) const {
    LogisticFit f;
    f.full_form = full;
    f.A1 = theta[0];
    f.A2 = full ? theta[1] : 0.0;
    f.S0 = std::exp(theta[full ? 2 : 1]);
    f.p = std::exp(theta[full ? 3 : 2]);
    return f;
  }

  // Fills the residuals (model - data) and optionally the Jacobian.
  void evaluate(const Eigen::VectorXd& theta, std::span<const double> x,
                std::span<const double> y, Eigen::VectorXd& residual,
                Eigen::MatrixXd* jacobian) const {
    const auto f = unpack(theta);
    const auto n = x.size();
    residual.resize(static_cast<Eigen::Index>(n));
    if (jacobian != nullptr) jacobian->resize(static_cast<Eigen::Index>(n), theta.size());
    for (std::size_t i = 0; i < n; ++i) {
      double u = 0.0;
      double log_ratio = 0.0;
      if (x[i] > 0.0) {
        log_ratio = std::log(x[i] / f.S0);
        u = std::exp(std::min(f.p * log_ratio, 700.0));
      }
      const double g = 1.0 / (1.0 + u);
      const auto row = static_cast<Eigen::Index>(i);
      residual[row] = (f.A1 - f.A2) * g + f.A2 - y[i];
      if (jacobian == nullptr) continue;
      // d model / d u = -(A1 - A2) g^2
      const double dm_du = -(f.A1 - f.A2) * g * g;
      const double du_dlogs0 = -f.p * u;
      const double du_dlogp = x[i] > 0.0 ? u * f.p * log_ratio : 0.0;
      Eigen::Index c = 0;
      (*jacobian)(row, c++) = g;
      if (full) (*jacobian)(row, c++) = 1.0 - g;
      (*jacobian)(row, c++) = dm_du * du_dlogs0;
      (*jacobian)(row, c++) = dm_du * du_dlogp;
    }
  }
};

void fill_quality(LogisticFit& fit, std::span<const double> x, std::span<const double> y) {
  double mean = 0.0;
  for (auto v : y) mean += v;
  mean /= static_cast<double>(y.size());
  double ss_res = 0.0;
  double ss_tot = 0.0;
  double chi = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = fit(x[i]);
    const double r = y[i] - m;
    ss_res += r * r;
    ss_tot += (y[i] - mean) * (y[i] - mean);
    if (m > 0.0) chi += r * r / m;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
  fit.chi_squared = chi;
}

}  // namespace

double LogisticFit::operator()(double s) const {
  const double u = s > 0.0 ? std::pow(s / S0, p) : 0.0;
  return (A1 - A2) / (1.0 + u) + A2;
}

LogisticFit fit_logistic(const Histogram& hist, bool full_form, const FitOptions& options) {
  const std::size_t needed = full_form ? 4 : 3;
  if (hist.populated_bins() < needed) {
    LogisticFit none;
    none.full_form = full_form;
    throw FitError("insufficient bins: " + std::to_string(hist.populated_bins()) +
                       " populated, need " + std::to_string(needed),
                   none);
  }
  const auto centers = hist.centers();
  return fit_logistic(centers, hist.densities, full_form, options);
}

LogisticFit fit_logistic(std::span<const double> centers, std::span<const double> densities,
                         bool full_form, const FitOptions& options) {
  if (centers.size() != densities.size()) {
    throw InvalidArgument("fit_logistic: centers and densities differ in length");
  }
  const std::size_t needed = full_form ? 4 : 3;
  const auto populated = static_cast<std::size_t>(
      std::count_if(densities.begin(), densities.end(), [](double d) { return d > 0.0; }));
  if (populated < needed) {
    LogisticFit none;
    none.full_form = full_form;
    throw FitError("insufficient bins: " + std::to_string(populated) + " populated, need " +
                       std::to_string(needed),
                   none);
  }

  const Model model{full_form};
  std::vector<double> sorted(centers.begin(), centers.end());
  std::sort(sorted.begin(), sorted.end());
  double median = sorted.size() % 2 == 1
                      ? sorted[sorted.size() / 2]
                      : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
  if (median <= 0.0) median = std::max(sorted.back(), 1e-12);

  Eigen::VectorXd theta(static_cast<Eigen::Index>(model.size()));
  const auto [min_it, max_it] = std::minmax_element(densities.begin(), densities.end());
  Eigen::Index c = 0;
  theta[c++] = *max_it;
  if (full_form) theta[c++] = *min_it;
  theta[c++] = std::log(median);
  theta[c++] = 0.0;

  Eigen::VectorXd residual, trial_residual;
  Eigen::MatrixXd jacobian;
  model.evaluate(theta, centers, densities, residual, &jacobian);
  double cost = residual.squaredNorm();
  double lambda = 1e-3;
  bool converged = false;
  std::size_t iteration = 0;

  while (iteration < options.max_iterations) {
    ++iteration;
    const Eigen::MatrixXd jtj = jacobian.transpose() * jacobian;
    const Eigen::VectorXd gradient = jacobian.transpose() * residual;
    if (gradient.lpNorm<Eigen::Infinity>() <= 1e-15 * std::max(1.0, cost)) {
      converged = true;
      break;
    }
    bool accepted = false;
    while (!accepted) {
      Eigen::MatrixXd damped = jtj;
      for (Eigen::Index i = 0; i < damped.rows(); ++i) {
        damped(i, i) += lambda * std::max(jtj(i, i), 1e-12);
      }
      const Eigen::VectorXd step = damped.ldlt().solve(-gradient);
      const Eigen::VectorXd candidate = theta + step;
      model.evaluate(candidate, centers, densities, trial_residual, nullptr);
      const double trial_cost = trial_residual.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        const double relative_drop = (cost - trial_cost) / std::max(cost, 1e-300);
        const double step_size = step.norm() / (theta.norm() + 1e-12);
        theta = candidate;
        cost = trial_cost;
        lambda = std::max(lambda / 10.0, 1e-12);
        accepted = true;
        if (relative_drop < 1e-12 || step_size < 1e-12) converged = true;
      } else {
        lambda *= 10.0;
        // No damping level improves the cost: a numerical minimum.
        if (lambda > 1e16) {
          converged = true;
          break;
        }
      }
    }
    if (converged) break;
    model.evaluate(theta, centers, densities, residual, &jacobian);
  }

  auto fit = model.unpack(theta);
  fit.iterations = iteration;
  fill_quality(fit, centers, densities);
  if (!converged) {
    throw FitError("logistic fit did not converge after " + std::to_string(iteration) +
                       " iterations",
                   fit);
  }
  return fit;
}

}  // namespace symnet::netstats
