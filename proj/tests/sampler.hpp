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

// Random admissible (zeta, z) pairs for each family.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "bkl/domains/families.hpp"
#include "support.hpp"

namespace bkl::test {

class Sampler {
 public:
  using cd = std::complex<double>;
  using Family = bkl::domains::Family;
  using FamilyPoint = bkl::domains::FamilyPoint;

  explicit Sampler(std::uint64_t seed = bkl::test::seed()) : gen_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }

  cd in_disc(double r) {
    return std::polar(r * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }

  // A point with stencil room for the default FD step.
  FamilyPoint point(Family f) {
    for (;;) {
      FamilyPoint p{f, 0.0, 0.0};
      switch (f) {
        case Family::kAnnulus: {
          const double r = uniform(0.1, 0.9);
          p.zeta = std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
          p.z = std::polar(uniform(r + 0.02, 0.98), uniform(0.0, 2.0 * std::numbers::pi));
          break;
        }
        case Family::kDisc:
          p.zeta = in_disc(0.9);
          p.z = -std::polar(1.0, bkl::domains::ThetaSpec{}.theta(p.zeta)) + in_disc(0.98);
          break;
        case Family::kSlit:
          p.zeta = 1.0 + in_disc(0.45);
          p.z = in_disc(0.98);
          break;
        case Family::kRectangle:
          p.zeta = cd(1.0, 1.0) + in_disc(0.45);
          p.z = cd(uniform(0.02, p.zeta.real() - 0.02), uniform(0.02, p.zeta.imag() - 0.02));
          break;
        case Family::kHalfStrip:
          p.zeta = 1.0 + in_disc(0.45);
          p.z = cd(uniform(0.02, p.zeta.real() - 0.02), uniform(0.02, 5.0));
          break;
      }
      if (admissible(f, p.zeta) && contains(p) && stencil_room(p) > 1e-6) return p;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bkl::test
