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

#include "bkl/levi/levi.hpp"

#include <algorithm>
#include <cmath>

#include "bkl/domains/conformal.hpp"
#include "bkl/error.hpp"
#include "bkl/special/weierstrass.hpp"
#include "bkl/tolerances.hpp"

namespace bkl::levi {

namespace {

double laplacian_estimate(Family family, cdouble zeta, cdouble z, const ThetaSpec& spec,
                          double h) {
  auto f = [&](cdouble s) {
    return std::log(domains::bergman_kernel({family, s, z}, spec));
  };
  const double center = f(zeta);
  const double ring = f(zeta + h) + f(zeta - h) + f(zeta + cdouble(0.0, h)) +
                      f(zeta - cdouble(0.0, h));
  return (ring - 4.0 * center) / (4.0 * h * h);
}

struct AnnulusArgs {
  double u;
  double omega1;
};

AnnulusArgs annulus_args(cdouble zeta, cdouble z) {
  if (!domains::contains({Family::kAnnulus, zeta, z})) {
    fail(ErrorCode::kDomain, "annulus: z not inside A_zeta");
  }
  const double omega1 = -std::log(std::abs(zeta));
  const double u = -2.0 * std::log(std::abs(z));
  if (u < kPoleRadius || 2.0 * omega1 - u < kPoleRadius) {
    fail(ErrorCode::kPole, "annulus: z within the pole radius of a boundary circle");
  }
  return {u, omega1};
}

}  // namespace

LeviEstimate levi_fd(Family family, cdouble zeta, cdouble z, const ThetaSpec& spec, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorCode::kInvalidArgument, "levi_fd: step must be positive");
  const double room = domains::stencil_room({family, zeta, z}, spec);
  if (!(room > 0.0)) fail(ErrorCode::kStencil, "levi_fd: z is not inside D_zeta");
  const double step = std::min(h, room / 10.0);
  if (step < kMinStep) fail(ErrorCode::kStencil, "levi_fd: stencil room below the minimum step");
  const double coarse = laplacian_estimate(family, zeta, z, spec, step);
  const double fine = laplacian_estimate(family, zeta, z, spec, step / 2.0);
  return {(4.0 * fine - coarse) / 3.0, step, std::abs(coarse - fine) / 3.0,
          Method::kFiniteDifference};
}

LeviEstimate levi_annulus_analytic(cdouble zeta, cdouble z) {
  const AnnulusArgs a = annulus_args(zeta, z);
  const special::Lattice L(a.omega1);
  const double c = special::robin_c(a.omega1);
  const double pu = special::weierstrass_p(a.u, L).real();
  const double pw = special::weierstrass_p(a.omega1, L).real();
  const double w = a.omega1;
  const double value = std::exp(2.0 * w) * (2.0 * pu - pw + c) * (pw + c) /
                       (4.0 * w * w * (pu + c) * (pu + c));
  return {value, 0.0, 0.0, Method::kAnalytic};
}

LeviEstimate levi_annulus_exact(cdouble zeta, cdouble z) {
  const AnnulusArgs a = annulus_args(zeta, z);
  const special::WpPlusC g = special::wp_plus_c_with_derivatives(a.u, a.omega1);
  const double r1 = g.d_omega / g.value;
  const double second = g.d2_omega / g.value - r1 * r1;
  // |d omega1 / d zeta|^2 = 1 / (4 |zeta|^2) = e^{2 omega1} / 4.
  return {std::exp(2.0 * a.omega1) / 4.0 * second, 0.0, 0.0, Method::kAnalytic};
}

double levi_disc_limit(cdouble z, const ThetaSpec& spec) {
  if (1.0 - std::abs(z + 1.0) < kDiscBoundaryGuard) {
    fail(ErrorCode::kBoundaryGuard, "levi_disc_limit: z too close to the boundary of C_0");
  }
  const double gap = -(std::norm(z) + 2.0 * z.real());  // 1 - |z + 1|^2
  const double tz = std::abs(spec.theta_zeta(0.0));
  return 4.0 * tz * tz * std::norm(z) * (z.real() + 2.0) / (gap * gap);
}

double levi_slit_limit(double r, double theta) {
  if (!(r >= 0.0 && r < 1.0)) fail(ErrorCode::kDomain, "levi_slit_limit: need 0 <= r < 1");
  const double den = 1.0 + r * r - 2.0 * r * std::cos(theta);
  return 0.25 * (1.0 + r * r * std::cos(2.0 * theta)) / den;
}

double levi_slit_boundary(double theta) {
  const double g = 1.0 - std::cos(theta);
  if (!(g > 0.0)) fail(ErrorCode::kDomain, "levi_slit_boundary: singular at theta = 0");
  return 0.25 * (g + 1.0 / g - 2.0);
}

LeviEstimate levi_slit_inner(cdouble z, double h) {
  const double dist = std::abs(z - 1.0);
  const double gap = 1.0 - std::abs(z);
  if (!(gap > kBoundaryGuard) || dist < kBoundaryGuard) {
    fail(ErrorCode::kDomain, "levi_slit_inner: z must lie in the unit disc away from 1");
  }
  const double tau = std::min({h, 1e-2 * gap, 1e-2 * dist * dist});
  if (tau < 1e-14) fail(ErrorCode::kStencil, "levi_slit_inner: step below the minimum");
  const cdouble kz = domains::koebe(z), dkz = domains::koebe_prime(z);
  auto F = [&](double t) {
    const double et = std::exp(t);
    const cdouble w = domains::koebe_inv(et * kz);
    const double g = 1.0 - std::norm(w);
    return std::log(std::norm(et * dkz / domains::koebe_prime(w)) / (g * g));
  };
  const double coarse = (F(tau) - F(-tau)) / (2.0 * tau);
  const double fine = (F(tau / 2.0) - F(-tau / 2.0)) / tau;
  return {(4.0 * fine - coarse) / 24.0, tau, std::abs(coarse - fine) / 24.0,
          Method::kFiniteDifference};
}

}  // namespace bkl::levi
