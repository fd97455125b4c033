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

#include "bkl/domains/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bkl/domains/conformal.hpp"
#include "bkl/error.hpp"
#include "bkl/special/jacobi.hpp"
#include "bkl/special/weierstrass.hpp"
#include "bkl/tolerances.hpp"

namespace bkl::domains {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const cdouble kRectBase(1.0, 1.0);

void require_admissible(Family f, cdouble zeta) {
  if (!admissible(f, zeta)) {
    fail(ErrorCode::kParameter,
         std::string("parameter zeta not admissible for family ") + to_string(f));
  }
}

// Distance from z to the ray {s zeta : s >= 1}.
double distance_to_ray(cdouble zeta, cdouble z) {
  const double s = std::max(1.0, (z * std::conj(zeta)).real() / std::norm(zeta));
  return std::abs(z - s * zeta);
}

// 1 - |z + e^{i theta}|^2 without cancellation near the center.
double disc_gap(cdouble z, double theta) {
  return -(std::norm(z) + 2.0 * (z * std::polar(1.0, -theta)).real());
}

void check_inside(const FamilyPoint& p, const ThetaSpec& spec) {
  if (!contains(p, spec)) {
    fail(ErrorCode::kDomain, std::string("z is not inside the ") + to_string(p.family) + " domain");
  }
}

}  // namespace

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::kAnnulus: return "annulus";
    case Family::kDisc: return "disc";
    case Family::kSlit: return "slit";
    case Family::kRectangle: return "rectangle";
    case Family::kHalfStrip: return "halfstrip";
  }
  return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
  for (Family f : {Family::kAnnulus, Family::kDisc, Family::kSlit, Family::kRectangle,
                   Family::kHalfStrip}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

double ThetaSpec::theta(cdouble zeta) const {
  cdouble sum = 0.0, power = zeta;
  for (const cdouble& a : coefficients) {
    sum += a * power;
    power *= zeta;
  }
  return sum.real();
}

cdouble ThetaSpec::theta_zeta(cdouble zeta) const {
  cdouble sum = 0.0, power = 1.0;
  double n = 1.0;
  for (const cdouble& a : coefficients) {
    sum += n * a * power;
    power *= zeta;
    n += 1.0;
  }
  return 0.5 * sum;
}

bool admissible(Family f, cdouble zeta) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) return false;
  const double r = std::abs(zeta);
  switch (f) {
    case Family::kAnnulus: return r > 0.0 && r < 1.0;
    case Family::kDisc: return r < 1.0;
    case Family::kSlit: return r < 1.0 && std::abs(zeta - 1.0) < kParameterDelta;
    case Family::kRectangle:
      return std::abs(zeta - kRectBase) < kParameterDelta && zeta.real() > 0.0 && zeta.imag() > 0.0;
    case Family::kHalfStrip: return std::abs(zeta - 1.0) < kParameterDelta && zeta.real() > 0.0;
  }
  return false;
}

bool contains(const FamilyPoint& p, const ThetaSpec& spec) {
  require_admissible(p.family, p.zeta);
  const cdouble z = p.z, zeta = p.zeta;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  switch (p.family) {
    case Family::kAnnulus: {
      const double r = std::abs(z);
      return r > std::abs(zeta) && r < 1.0;
    }
    case Family::kDisc: return disc_gap(z, spec.theta(zeta)) > 0.0;
    case Family::kSlit: return std::abs(z) < 1.0 && distance_to_ray(zeta, z) >= kSlitBand;
    case Family::kRectangle:
      return z.real() > 0.0 && z.real() < zeta.real() && z.imag() > 0.0 && z.imag() < zeta.imag();
    case Family::kHalfStrip: return z.real() > 0.0 && z.real() < zeta.real() && z.imag() > 0.0;
  }
  return false;
}

double stencil_room(const FamilyPoint& p, const ThetaSpec& spec) {
  if (!contains(p, spec)) return 0.0;
  const cdouble z = p.z, zeta = p.zeta;
  const double r = std::abs(zeta);
  switch (p.family) {
    case Family::kAnnulus: return std::min({std::abs(z) - r, r});
    case Family::kDisc: {
      // The center -e^{i theta} moves by at most 2 |theta_zeta| |dzeta|.
      const double grad = 2.0 * std::abs(spec.theta_zeta(zeta));
      const double gap = 1.0 - std::abs(z + std::polar(1.0, spec.theta(zeta)));
      const double room = grad > 0.0 ? gap / grad : kInf;
      return std::min(room, 1.0 - r);
    }
    case Family::kSlit: {
      // Points s zeta' with |s zeta'| < 1 move by at most |dzeta| / |zeta|.
      return std::min({distance_to_ray(zeta, z) * r, 1.0 - r, kParameterDelta - std::abs(zeta - 1.0)});
    }
    case Family::kRectangle:
      return std::min({zeta.real() - z.real(), zeta.imag() - z.imag(),
                       kParameterDelta - std::abs(zeta - kRectBase)});
    case Family::kHalfStrip:
      return std::min(zeta.real() - z.real(), kParameterDelta - std::abs(zeta - 1.0));
  }
  return 0.0;
}

double bergman_annulus(cdouble zeta, cdouble z) {
  check_inside({Family::kAnnulus, zeta, z}, {});
  const double omega1 = -std::log(std::abs(zeta));
  const double u = -2.0 * std::log(std::abs(z));
  if (u < kPoleRadius || 2.0 * omega1 - u < kPoleRadius) {
    fail(ErrorCode::kPole, "bergman_annulus: z within the pole radius of a boundary circle");
  }
  const special::WpPlusC g = special::wp_plus_c_with_derivatives(u, omega1);
  return g.value / (kPi * std::norm(z));
}

double bergman_disc_family(cdouble zeta, cdouble z, const ThetaSpec& spec) {
  require_admissible(Family::kDisc, zeta);
  const double theta = spec.theta(zeta);
  const double margin = 1.0 - std::abs(z + std::polar(1.0, theta));
  if (margin <= 0.0) fail(ErrorCode::kDomain, "bergman_disc_family: z outside the disc");
  if (margin < kDiscBoundaryGuard) {
    fail(ErrorCode::kBoundaryGuard, "bergman_disc_family: z too close to the boundary circle");
  }
  const double gap = disc_gap(z, theta);
  return 1.0 / (kPi * gap * gap);
}

double bergman_slit(cdouble zeta, cdouble z) {
  check_inside({Family::kSlit, zeta, z}, {});
  const SlitImage img = slit_map(zeta, z);
  const double gap = 1.0 - std::norm(img.w);
  if (gap <= 2.0 * kBoundaryGuard) {
    fail(ErrorCode::kBoundaryGuard, "bergman_slit: image point too close to the unit circle");
  }
  return std::norm(img.w_z) / (kPi * gap * gap);
}

double bergman_rectangle(cdouble zeta, cdouble z) {
  check_inside({Family::kRectangle, zeta, z}, {});
  const double dist = std::min({z.real(), z.imag(), zeta.real() - z.real(), zeta.imag() - z.imag()});
  if (dist < kBoundaryGuard) {
    fail(ErrorCode::kBoundaryGuard, "bergman_rectangle: z too close to an edge or vertex");
  }
  const RectangleModulus rm = solve_modulus(zeta);
  const double scale = rm.K / zeta.real();
  const special::JacobiTriple j = special::jacobi(scale * z, rm.modulus);
  const double im_sn2 = (j.sn * j.sn).imag();
  return std::norm(j.sn * j.cn * j.dn * scale) / (kPi * im_sn2 * im_sn2);
}

double bergman_halfstrip(cdouble zeta, cdouble z) {
  check_inside({Family::kHalfStrip, zeta, z}, {});
  const double dist = std::min({z.real(), z.imag(), zeta.real() - z.real()});
  if (dist < kBoundaryGuard) {
    fail(ErrorCode::kBoundaryGuard, "bergman_halfstrip: z too close to the boundary");
  }
  // |A sin u cos u|^2 / (pi (Im sin^2 u)^2) = (A^2/pi)(1/sin^2 2x + 1/sinh^2 2y).
  const double A = kPi / (2.0 * zeta.real());
  const double x = A * z.real(), y = A * z.imag();
  const double s = std::sin(2.0 * x), sh = std::sinh(2.0 * y);
  return A * A / kPi * (1.0 / (s * s) + 1.0 / (sh * sh));
}

double bergman_kernel(const FamilyPoint& p, const ThetaSpec& spec) {
  switch (p.family) {
    case Family::kAnnulus: return bergman_annulus(p.zeta, p.z);
    case Family::kDisc: return bergman_disc_family(p.zeta, p.z, spec);
    case Family::kSlit: return bergman_slit(p.zeta, p.z);
    case Family::kRectangle: return bergman_rectangle(p.zeta, p.z);
    case Family::kHalfStrip: return bergman_halfstrip(p.zeta, p.z);
  }
  fail(ErrorCode::kInvalidArgument, "unknown family");
}

}  // namespace bkl::domains
