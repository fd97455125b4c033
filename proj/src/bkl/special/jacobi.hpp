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

// Jacobi elliptic functions sn, cn, dn for real and complex argument.

#pragma once

#include <complex>

#include "bkl/special/elliptic.hpp"
#include "bkl/tolerances.hpp"

namespace bkl::special {

struct JacobiReal {
  double sn;
  double cn;
  double dn;
};

struct JacobiTriple {
  cdouble sn;
  cdouble cn;
  cdouble dn;
  cdouble u;
  double k;
};

// Real argument. Reduces x to [0, K/2] by parity, the half-period shift and
// the quarter-period reflection sn(K-y) = cn y / dn y, so that values close
// to the quarter period keep full relative precision in cn.
JacobiReal jacobi_real(double x, const Modulus& m);
JacobiReal jacobi_real(double x, const Modulus& m, double K);

// Complex argument u = x + iy through the addition theorem with v = iy and
// Jacobi's imaginary transformation, using real evaluations at k (for x) and
// k' (for y). Throws Error(kPole) within pole_radius of 2mK + (2n+1)iK'.
JacobiTriple jacobi(cdouble u, const Modulus& m, double pole_radius = kPoleRadius);

}  // namespace bkl::special
