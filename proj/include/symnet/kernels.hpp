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

// Dense double-precision vector kernels used by the classifiers,
// standardization and correlation code. Each kernel has a portable scalar
// reference and, on x86-64, an AVX2/FMA variant; the variant is chosen once at
// first use from CPUID. Setting SYMNET_SIMD=scalar forces the reference path.
//
// The vector variants reduce in a different order than the scalar loop, so
// results agree to rounding, not bit-for-bit. Within one process the choice is
// fixed, so repeated runs on one machine are reproducible.

#include <cstddef>
#include <span>
#include <string_view>

namespace symnet::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
};

const KernelTable& scalar_kernels();
// nullptr when the CPU (or the build) lacks AVX2 and FMA.
const KernelTable* avx2_kernels();
// The table in use.
const KernelTable& active_kernels();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_kernels().dot(a.data(), b.data(), a.size());
}
inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  return active_kernels().squared_distance(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}
inline double sum(std::span<const double> x) { return active_kernels().sum(x.data(), x.size()); }

namespace detail {
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif
}  // namespace detail

}  // namespace symnet::simd
