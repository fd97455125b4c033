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

// Conformal maps behind the slit-disc and rectangle kernels.

#pragma once

#include <complex>

#include "bkl/special/elliptic.hpp"

namespace bkl::domains {

using cdouble = std::complex<double>;

// Koebe function w / (1 + w)^2 and its derivative (1 - w) / (1 + w)^3.
cdouble koebe(cdouble w);
cdouble koebe_prime(cdouble w);

// Branch of the inverse mapping C \ [1/4, inf) onto the unit disc.
cdouble koebe_inv(cdouble omega);

struct SlitParams {
  double t;
  double theta;  // in [0, 2 pi)
};

SlitParams slit_params(cdouble zeta);
cdouble slit_reconstruct(const SlitParams& p);

struct SlitImage {
  cdouble w;    // E_zeta^{-1}(z)
  cdouble w_z;  // its z-derivative
};

// w = K^{-1}(e^t K(e^{i theta} z)) and its derivative by the chain rule.
SlitImage slit_map(cdouble zeta, cdouble z);
inline cdouble slit_map_inv(cdouble zeta, cdouble z) { return slit_map(zeta, z).w; }

struct RectangleModulus {
  special::Modulus modulus;
  double K;
  double K_prime;
  double C;  // Re zeta / K
};

// Solves Im(zeta) K(k) = Re(zeta) K(k').
RectangleModulus solve_modulus(cdouble zeta);

struct SeriesCoefficients {
  double k0, a, b, c, d, e;
};

// Coefficients of k(1 + i + eps) = k0 + 2 Re((a + ib) eps)
//   + 2 Re((c + id) eps^2) + 2 e |eps|^2 + ...
SeriesCoefficients modulus_series_coefficients();
double modulus_series(cdouble eps);

// K_Omega(z, z) = K_D(f(z), f(z)) |f'(z)|^2.
double transform_kernel(double base_kernel, cdouble f_prime);

}  // namespace bkl::domains
