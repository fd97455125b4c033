// Copyright 2026 The bkl Authors.
//
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

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>

namespace bkl::test {

inline std::uint64_t seed() {
  const char* s = std::getenv("BKL_SEED");
  if (s == nullptr || *s == '\0') return 20260101;
  return std::strtoull(s, nullptr, 10);
}

inline std::mt19937_64 rng() { return std::mt19937_64(seed()); }

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace bkl::test
