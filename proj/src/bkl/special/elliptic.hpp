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

// Complete and incomplete elliptic integrals of the first and second kind.

#pragma once

#include <complex>

namespace bkl::special {

using cdouble = std::complex<double>;

// Elliptic modulus k in (0,1) together with its complement k' = sqrt(1-k^2).
// The complement is stored rather than recomputed so that moduli close to 1
// keep full relative precision in k'.
class Modulus {
 public:
  // Throws Error(kDomain) unless 0 < k < 1.
  explicit Modulus(double k);

  // Builds a modulus from both members of the pair; k*k + kp*kp must equal 1
  // to within a few ulps.
  static Modulus from_pair(double k, double kp);

  // k = sin(angle), k' = cos(angle), angle in (0, pi/2).
  static Modulus from_angle(double angle);

  double k() const noexcept { return k_; }
  double k_prime() const noexcept { return kp_; }
  Modulus complement() const noexcept { return Modulus(kp_, k_, 0); }

 private:
  Modulus(double k, double kp, int) noexcept : k_(k), kp_(kp) {}

  double k_;
  double kp_;
};

struct EllipticValues {
  double K;        // K(k)
  double E;        // E(k)
  double K_prime;  // K(k')
  double E_prime;  // E(k')
};

// AGM evaluations, accurate to a few ulps.
double complete_K(const Modulus& m);
double complete_E(const Modulus& m);
EllipticValues complete_integrals(const Modulus& m);

// Convenience overloads. K accepts [0,1), E accepts [0,1]; other k throw
// Error(kDomain).
double complete_K(double k);
double complete_E(double k);

// dK/dk = (E - k'^2 K) / (k k'^2),  dE/dk = (E - K) / k.
double dK_dk(const Modulus& m);
double dE_dk(const Modulus& m);

// Carlson's symmetric integral R_F for complex arguments off the closed
// negative real axis (at most one argument may be zero).
cdouble carlson_rf(cdouble x, cdouble y, cdouble z);

// F(w,k) = int_0^w dt / sqrt((1-t^2)(1-k^2 t^2)) on the principal branch,
// i.e. along the straight segment from 0; the cuts are the real rays
// |Re w| >= 1. F(1,k) = K(k).
// Throws kDomain at the singular endpoints -1, +-1/k and kBranchCut for real
// w with |w| > 1.
cdouble incomplete_F(cdouble w, const Modulus& m);

}  // namespace bkl::special
