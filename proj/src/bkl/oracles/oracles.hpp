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

// Brute-force reference implementations, independent of the production
// evaluators. Used by the tests and by selftest only.

#pragma once

#include <complex>
#include <vector>

#include "bkl/special/weierstrass.hpp"

namespace bkl::oracles {

using cdouble = std::complex<double>;

struct OracleConfig {
  int truncation = 400;        // series terms / lattice radius in cells
  int quadrature_order = 0;    // 0 selects 2D + 2
  double tolerance = 1e-13;    // relative bound the oracle must certify
};

// Value with the certified truncation bound. Oracles throw
// Error(kOracleRefused) when the bound exceeds cfg.tolerance.
struct OracleValue {
  double value;
  double bound;
};

struct OracleComplex {
  cdouble value;
  double bound;
};

// Monomial-basis kernel of A(r, 1):
//   sum_{n != -1} (n+1)|z|^{2n} / (pi (1 - r^{2n+2})) + |z|^{-2} / (2 pi log(1/r)).
OracleValue laurent_annulus_kernel(double r, cdouble z, const OracleConfig& cfg = {});

struct GramSchmidtResult {
  double value;
  std::vector<double> partial_sums;  // after each basis element
};

// sum_{j <= D} |phi_j(z)|^2 with phi_j orthonormalized from the centered
// monomials under tensor Gauss-Legendre quadrature on (0, Re zeta) x (0, Im zeta).
GramSchmidtResult gram_schmidt_kernel(cdouble zeta, cdouble z, int degree,
                                      const OracleConfig& cfg = {});

// Same machinery on the unit disc (polar Gauss-Legendre x trapezoid).
GramSchmidtResult gram_schmidt_disc_kernel(cdouble z, int degree, const OracleConfig& cfg = {});

// Defining integrals in the form int_0^{pi/2} (1 - k^2 sin^2 phi)^{-+1/2} dphi.
OracleValue quadrature_K(double k);
OracleValue quadrature_E(double k);

// Direct lattice sums over |omega| <= R with circular truncation.
OracleComplex lattice_p(cdouble u, const special::Lattice& L, const OracleConfig& cfg = {});
OracleComplex lattice_zeta(cdouble u, const special::Lattice& L, const OracleConfig& cfg = {});

// Closed-form zeta -> 1 limit of the slit-disc Levi form:
//   (1/4) Re((1 + 2z - z^2)/(1 - z)^2) + |z|^2 Re((1 + z)/(1 - z)) / (2 (1 - |z|^2)).
double slit_inner_limit(cdouble z);

}  // namespace bkl::oracles
