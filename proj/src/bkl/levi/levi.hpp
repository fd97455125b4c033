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

// Levi form d^2 log K / d zeta d zetabar of the diagonal kernel.

#pragma once

#include <complex>

#include "bkl/domains/families.hpp"

namespace bkl::levi {

using cdouble = std::complex<double>;
using domains::Family;
using domains::ThetaSpec;

enum class Method { kFiniteDifference, kAnalytic };

struct LeviEstimate {
  double value = 0.0;
  double h = 0.0;
  double richardson_error = 0.0;
  Method method = Method::kFiniteDifference;
};

inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kMinStep = 1e-9;

// (1/(4h^2)) times the 5-point Laplacian of log K in zeta, at h and h/2,
// combined by Richardson extrapolation. The step is shrunk to a tenth of
// stencil_room() when the moving domain leaves less space than h.
LeviEstimate levi_fd(Family family, cdouble zeta, cdouble z, const ThetaSpec& spec = {},
                     double h = kDefaultStep);

// Closed form e^{2w}(2P(u) - P(w) + c)(P(w) + c) / (4 w^2 (P(u) + c)^2).
LeviEstimate levi_annulus_analytic(cdouble zeta, cdouble z);

// (e^{2w}/4) d^2/dw^2 log(P(u; w) + c(w)), with the w-derivatives taken
// term by term in the nome series.
LeviEstimate levi_annulus_exact(cdouble zeta, cdouble z);

// zeta -> 0 limit for the disc family, center -1.
double levi_disc_limit(cdouble z, const ThetaSpec& spec = {});

// Closed-form zeta -> 1 limit for the slit disc at z = r e^{i theta} and
// its r -> 1 boundary profile.
double levi_slit_limit(double r, double theta);
double levi_slit_boundary(double theta);

// zeta -> 1 inner limit of the slit-disc Levi form. The kernel depends on
// zeta only through (t, theta), and at |zeta| -> 1 one has t' -> 0,
// t'' -> 1/2 and d^2/dtheta^2 log K = 0 at t = 0, so the limit equals
// (1/8) d/dt log K(t, 0, z) at t = 0. The t-derivative is a Richardson
// central difference whose step also keeps the slit of length ~2 sqrt(t)
// away from z.
LeviEstimate levi_slit_inner(cdouble z, double h = kDefaultStep);

}  // namespace bkl::levi
