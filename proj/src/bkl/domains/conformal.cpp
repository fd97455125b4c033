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

#include "bkl/domains/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bkl/error.hpp"

namespace bkl::domains {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

cdouble koebe(cdouble w) {
  if (w == cdouble(-1.0)) fail(ErrorCode::kPole, "koebe: pole at w = -1");
  const cdouble d = 1.0 + w;
  return w / (d * d);
}

cdouble koebe_prime(cdouble w) {
  if (w == cdouble(-1.0)) fail(ErrorCode::kPole, "koebe: pole at w = -1");
  const cdouble d = 1.0 + w;
  return (1.0 - w) / (d * d * d);
}

cdouble koebe_inv(cdouble omega) {
  if (omega.imag() == 0.0 && omega.real() >= 0.25) {
    fail(ErrorCode::kBranchCut, "koebe_inv: argument on the cut [1/4, inf)");
  }
  // (1 - 2w - sqrt(1 - 4w)) / (2w), rationalized so that w = 0 is harmless.
  return 2.0 * omega / (1.0 - 2.0 * omega + std::sqrt(1.0 - 4.0 * omega));
}

SlitParams slit_params(cdouble zeta) {
  const double r = std::abs(zeta);
  if (!(r > 0.0 && r < 1.0)) fail(ErrorCode::kDomain, "slit_params: need 0 < |zeta| < 1");
  // 4 K(r) = 1 - ((1 - r)/(1 + r))^2.
  const double s = (1.0 - r) / (1.0 + r);
  const double t = -std::log1p(-s * s);
  double theta = -std::arg(zeta);
  if (theta < 0.0) theta += 2.0 * kPi;
  if (theta >= 2.0 * kPi) theta = 0.0;
  return {t, theta};
}

cdouble slit_reconstruct(const SlitParams& p) {
  return std::polar(1.0, -p.theta) * koebe_inv(std::exp(-p.t) / 4.0);
}

SlitImage slit_map(cdouble zeta, cdouble z) {
  const SlitParams p = slit_params(zeta);
  const cdouble rot = std::polar(1.0, p.theta);
  const double et = std::exp(p.t);
  const cdouble x = rot * z;
  const cdouble omega = et * koebe(x);
  if (std::abs(omega.imag()) <= kEps * std::abs(omega) && omega.real() >= 0.25) {
    fail(ErrorCode::kBranchCut, "slit_map: z lies on the slit");
  }
  const cdouble w = koebe_inv(omega);
  return {w, et * koebe_prime(x) * rot / koebe_prime(w)};
}

namespace {

// Root alpha in (0, pi/4] of b K(sin alpha) = a K(cos alpha) for b >= a.
// Keeping alpha away from pi/2 keeps both k = sin alpha and k' = cos alpha
// accurate; wide rectangles are solved through their transpose.
double solve_angle(double a, double b) {
  // f increases from -inf to +inf on (0, pi/2).
  auto f = [&](double alpha, double& df) {
    const special::Modulus m = special::Modulus::from_angle(alpha);
    const special::Modulus mc = m.complement();
    const double K = special::complete_K(m), Kp = special::complete_K(mc);
    df = b * special::dK_dk(m) * m.k_prime() + a * special::dK_dk(mc) * m.k();
    return b * K - a * Kp;
  };
  double lo = 0.0, hi = kPi / 4.0 + 1e-12;
  double alpha = kPi / 4.0;
  // Initial guess from the leading nome asymptotics when the aspect is far from 1.
  const double ratio = b / a;
  if (ratio > 4.0) alpha = std::asin(std::min(0.999, 4.0 * std::exp(-kPi * ratio / 2.0)));
  const double scale = a + b;
  for (int it = 0; it < 200; ++it) {
    double df = 0.0;
    const double fa = f(alpha, df);
    if (std::abs(fa) <= 1e-15 * scale) return alpha;
    if (fa < 0.0) lo = alpha; else hi = alpha;
    if (hi - lo <= 4.0 * kEps * hi) return alpha;
    double next = alpha - fa / df;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    alpha = next;
  }
  fail(ErrorCode::kConvergence, "solve_modulus: no convergence");
}

}  // namespace

RectangleModulus solve_modulus(cdouble zeta) {
  const double a = zeta.real(), b = zeta.imag();
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    fail(ErrorCode::kParameter, "solve_modulus: need Re zeta > 0 and Im zeta > 0");
  }
  special::Modulus m(0.5);
  if (b >= a) {
    m = special::Modulus::from_angle(solve_angle(a, b));
  } else {
    // k(a + ib) is the complementary modulus of k(b + ia).
    const double beta = solve_angle(b, a);
    m = special::Modulus::from_pair(std::cos(beta), std::sin(beta));
  }
  const double K = special::complete_K(m);
  const double Kp = special::complete_K(m.complement());
  return {m, K, Kp, a / K};
}

SeriesCoefficients modulus_series_coefficients() {
  const special::Modulus m(std::sqrt(0.5));
  const double K = special::complete_K(m), E = special::complete_E(m);
  const double a = K / (4.0 * std::sqrt(2.0) * (2.0 * E - K));
  const double d = -std::sqrt(2.0) * a * a;
  return {m.k(), a, a, -a / 2.0, d, d};
}

double modulus_series(cdouble eps) {
  const SeriesCoefficients s = modulus_series_coefficients();
  return s.k0 + 2.0 * (cdouble(s.a, s.b) * eps).real() +
         2.0 * (cdouble(s.c, s.d) * eps * eps).real() + 2.0 * s.e * std::norm(eps);
}

double transform_kernel(double base_kernel, cdouble f_prime) {
  return base_kernel * std::norm(f_prime);
}

}  // namespace bkl::domains
