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

#include "symnet/error.hpp"
#include "symnet/statistics.hpp"

namespace symnet::netstats {

// P(S) = (A1 - A2) / (1 + (S / S0)^p) + A2. The reduced form fixes A2 = 0, in
// which case A1 plays the role of A.
struct LogisticFit {
  double A1 = 0.0;
  double A2 = 0.0;
  double S0 = 0.0;
  double p = 0.0;
  bool full_form = true;
  double r_squared = 0.0;
  double chi_squared = 0.0;
  std::size_t iterations = 0;

  double A() const { return A1; }
  double operator()(double s) const;
};

class FitError : public Error {
 public:
  FitError(const std::string& what, LogisticFit best) : Error(what), best_(best) {}
  // Best parameters reached before giving up.
  const LogisticFit& best() const { return best_; }

 private:
  LogisticFit best_;
};

struct FitOptions {
  std::size_t max_iterations = 500;
};

// Levenberg-Marquardt on the bin-center densities, with S0 and p optimized in
// log space so they stay positive. Starts from A1 = max density, A2 = min
// density (0 in the reduced form), S0 = median bin center, p = 1.
//
// r_squared = 1 - SS_res / SS_tot (0 when the densities are constant);
// chi_squared = sum of residual^2 / model over bins with positive model.
//
// Needs >= 4 populated bins for the full form and >= 3 for the reduced one
// ("insufficient bins" FitError otherwise); hitting the iteration cap throws a
// FitError carrying the best-so-far parameters.
LogisticFit fit_logistic(const Histogram& hist, bool full_form, const FitOptions& options = {});
LogisticFit fit_logistic(std::span<const double> centers, std::span<const double> densities,
                         bool full_form, const FitOptions& options = {});

}  // namespace symnet::netstats
