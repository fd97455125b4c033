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

// Weierstrass P and zeta for the rectangular lattice with periods 2*omega1
// (real) and 2*pi*i, the lattice of the annulus kernel.

#pragma once

#include <complex>

#include "bkl/special/elliptic.hpp"
#include "bkl/tolerances.hpp"

namespace bkl::special {

class Lattice {
 public:
  // Throws Error(kDomain) unless omega1 > 0.
  explicit Lattice(double omega1);

  double omega1() const noexcept { return omega1_; }
  cdouble omega2() const noexcept;

 private:
  double omega1_;
};

// Nome-series evaluation, q = exp(-pi^2/omega1). Both throw Error(kPole)
// within pole_radius of a lattice point.
cdouble weierstrass_p(cdouble u, const Lattice& L, double pole_radius = kPoleRadius);
cdouble weierstrass_zeta(cdouble u, const Lattice& L, double pole_radius = kPoleRadius);

// eta1 = zeta_W(omega1).
double weierstrass_eta1(const Lattice& L);

// c(omega1) = zeta_W(omega1) / omega1.
double robin_c(double omega1);

// P(u) + c(omega1) for real u in (0, 2*omega1) together with its first and
// second derivatives with respect to omega1 (u and omega2 held fixed).
// In the nome expansion the constant terms cancel:
//   P(u) + c = A^2 (csc^2(Au) - 8 sum n Q_n cos(2nAu)),
//   A = pi/(2 omega1), Q_n = q^2n / (1 - q^2n).
struct WpPlusC {
  double value;
  double d_omega;
  double d2_omega;
};
WpPlusC wp_plus_c_with_derivatives(double u, double omega1);

}  // namespace bkl::special
