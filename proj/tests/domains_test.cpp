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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bkl/domains/conformal.hpp"
#include "bkl/domains/families.hpp"
#include "bkl/error.hpp"
#include "bkl/oracles/oracles.hpp"
#include "bkl/special/jacobi.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bkl::domains;
using bkl::ErrorCode;
using bkl::test::rel_err;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0.0, 1.0);

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const bkl::Error& e) {
    return e.code();
  }
  FAIL("expected bkl::Error");
  return ErrorCode::kInvalidArgument;
}

double disc_kernel(cd z) {
  const double g = 1.0 - std::norm(z);
  return 1.0 / (kPi * g * g);
}

cd random_disc_point(std::mt19937_64& gen, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(gen)), 2.0 * kPi * u(gen));
}

}  // namespace

TEST_SUITE("family membership") {
  TEST_CASE("names round trip") {
    for (Family f : {Family::kAnnulus, Family::kDisc, Family::kSlit, Family::kRectangle,
                     Family::kHalfStrip}) {
      CHECK(family_from_string(to_string(f)) == f);
    }
    CHECK_FALSE(family_from_string("torus").has_value());
  }

  TEST_CASE("contains") {
    CHECK(contains({Family::kAnnulus, 0.5, 0.7}));
    CHECK_FALSE(contains({Family::kAnnulus, 0.5, 0.3}));
    CHECK_FALSE(contains({Family::kSlit, 0.9, 0.95}));
    CHECK(contains({Family::kSlit, 0.9, cd(0.95, 0.1)}));
    CHECK(contains({Family::kRectangle, cd(1.0, 1.0), cd(0.5, 0.5)}));
    CHECK_FALSE(contains({Family::kRectangle, cd(1.0, 1.0), cd(1.5, 0.5)}));
    CHECK(contains({Family::kHalfStrip, 1.0, cd(0.5, 100.0)}));
    CHECK(contains({Family::kDisc, 0.0, -1.0}));
    CHECK_FALSE(contains({Family::kDisc, 0.0, 0.5}));
  }

  TEST_CASE("inadmissible parameters are refused") {
    CHECK_FALSE(admissible(Family::kAnnulus, 1.2));
    CHECK_FALSE(admissible(Family::kAnnulus, 0.0));
    CHECK_FALSE(admissible(Family::kSlit, 0.2));
    CHECK_FALSE(admissible(Family::kRectangle, cd(3.0, 1.0)));
    CHECK(code_of([] { contains({Family::kAnnulus, 1.5, 0.7}); }) == ErrorCode::kParameter);
    CHECK(code_of([] { bergman_annulus(0.5, 0.2); }) == ErrorCode::kDomain);
  }

  TEST_CASE("stencil room is positive inside and zero outside") {
    CHECK(stencil_room({Family::kAnnulus, 0.5, 0.7}) == doctest::Approx(0.2));
    CHECK(stencil_room({Family::kAnnulus, 0.5, 0.3}) == 0.0);
    CHECK(stencil_room({Family::kRectangle, cd(1.0, 1.0), cd(0.9, 0.5)}) == doctest::Approx(0.1));
    CHECK(stencil_room({Family::kDisc, 0.0, -1.0}) > 0.0);
  }
}

TEST_SUITE("conformal maps") {
  TEST_CASE("Koebe function") {
    CHECK(koebe(0.0) == cd(0.0, 0.0));
    CHECK(koebe_inv(0.0) == cd(0.0, 0.0));
    auto gen = bkl::test::rng();
    for (int i = 0; i < 100; ++i) {
      const cd w = random_disc_point(gen, 0.999);
      CHECK(std::abs(koebe_inv(koebe(w)) - w) < 1e-13);
    }
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
      const cd v = koebe(i / 100.0);
      CHECK(v.imag() == 0.0);
      CHECK(v.real() > prev);
      CHECK(v.real() < 0.25);
      prev = v.real();
    }
    CHECK(code_of([] { koebe_inv(0.3); }) == ErrorCode::kBranchCut);
    const cd w(0.3, 0.2), h(1e-6, 0.0);
    CHECK(rel_err(koebe_prime(w), (koebe(w + h) - koebe(w - h)) / (2.0 * h.real())) < 1e-9);
  }

  TEST_CASE("slit parameters") {
    const SlitParams p = slit_params(0.9);
    CHECK(p.theta == 0.0);
    CHECK(p.t == doctest::Approx(-std::log(4.0 * 0.9 / (1.9 * 1.9))).epsilon(1e-14));
    CHECK(p.t == doctest::Approx(0.00277).epsilon(1e-2));
    double last = p.t;
    for (double r : {0.99, 0.999, 0.9999}) {
      const SlitParams q = slit_params(r);
      CHECK(q.t < last);
      last = q.t;
    }
    CHECK(last < 1e-7);
    auto gen = bkl::test::rng();
    std::uniform_real_distribution<double> u(-0.45, 0.45);
    for (int i = 0; i < 50; ++i) {
      const cd zeta = 1.0 + cd(u(gen), u(gen));
      if (!admissible(Family::kSlit, zeta)) continue;
      CHECK(std::abs(slit_reconstruct(slit_params(zeta)) - zeta) < 1e-12);
    }
  }

  TEST_CASE("slit map") {
    const cd zeta = slit_reconstruct({1e-5, 0.0});
    CHECK(std::abs(slit_map(zeta, 0.0).w) < 1e-16);
    const double t = slit_params(zeta).t;
    const cd w = slit_map(zeta, 0.3).w;
    CHECK(std::abs((w - 0.3) / t - 0.3 * 1.3 / 0.7) < 1e-4);
    auto gen = bkl::test::rng();
    int checked = 0;
    std::uniform_real_distribution<double> u(-0.45, 0.45);
    for (int i = 0; i < 2000 && checked < 200; ++i) {
      const cd zp = 1.0 + cd(u(gen), u(gen));
      const cd z = random_disc_point(gen, 0.999);
      if (!admissible(Family::kSlit, zp) || !contains({Family::kSlit, zp, z})) continue;
      CHECK(std::abs(slit_map(zp, z).w) < 1.0);
      ++checked;
    }
    CHECK(checked == 200);
    const cd zs(0.9, 0.0), z(0.4, 0.3), h(1e-6, 0.0);
    const cd fd = (slit_map(zs, z + h).w - slit_map(zs, z - h).w) / (2.0 * h.real());
    CHECK(rel_err(slit_map(zs, z).w_z, fd) < 1e-6);
    CHECK(code_of([] { slit_map(0.9, 0.95); }) == ErrorCode::kBranchCut);
  }

  TEST_CASE("rectangle modulus") {
    const RectangleModulus sq = solve_modulus(cd(1.0, 1.0));
    CHECK(std::abs(sq.modulus.k() - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(solve_modulus(cd(1.0, 2.0)).modulus.k() < 1.0 / std::sqrt(2.0));
    CHECK(solve_modulus(cd(2.0, 1.0)).modulus.k() > 1.0 / std::sqrt(2.0));
    for (cd z : {cd(1.2, 0.9), cd(0.7, 1.3), cd(1.0, 5.0), cd(3.0, 0.2)}) {
      const double k1 = solve_modulus(z).modulus.k();
      const double k2 = solve_modulus(cd(z.imag(), z.real())).modulus.k();
      CHECK(std::abs(k1 * k1 + k2 * k2 - 1.0) < 1e-12);
      const RectangleModulus rm = solve_modulus(z);
      CHECK(rel_err(rm.K_prime / rm.K, z.imag() / z.real()) < 1e-13);
    }
    CHECK(code_of([] { solve_modulus(cd(-1.0, 1.0)); }) == ErrorCode::kParameter);
  }

  TEST_CASE("modulus series about 1+i") {
    const SeriesCoefficients c = modulus_series_coefficients();
    CHECK(c.k0 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const double K = bkl::oracles::quadrature_K(1.0 / std::sqrt(2.0)).value;
    const double E = bkl::oracles::quadrature_E(1.0 / std::sqrt(2.0)).value;
    CHECK(rel_err(c.a, K / (4.0 * std::sqrt(2.0) * (2.0 * E - K))) < 1e-13);
    CHECK(c.a == doctest::Approx(0.38686512).epsilon(1e-7));
    CHECK(modulus_series(0.0) == doctest::Approx(c.k0).epsilon(1e-15));
    std::vector<double> xs, ys;
    for (double e : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) {
      const cd eps = e * cd(0.6, 0.8);
      xs.push_back(std::log(e));
      ys.push_back(std::log(std::abs(modulus_series(eps) - solve_modulus(cd(1.0, 1.0) + eps).modulus.k())));
    }
    const double slope = (ys.back() - ys.front()) / (xs.back() - xs.front());
    CHECK(slope >= 2.8);
  }

  TEST_CASE("kernel transformation rule") {
    CHECK(transform_kernel(2.5, 1.0) == 2.5);
    // Cayley w = i (1 + z) / (1 - z) has w'(0) = 2i and sends 0 to i.
    CHECK(transform_kernel(1.0 / (4.0 * kPi), cd(0.0, 2.0)) == doctest::Approx(1.0 / kPi));
    // z -> z / 2 maps 2D onto D; at the center the kernel scales by 1/4.
    CHECK(transform_kernel(1.0 / kPi, 0.5) == doctest::Approx(1.0 / (4.0 * kPi)));
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("annulus") {
    const double k = bergman_annulus(0.5, 0.7);
    CHECK(k == doctest::Approx(3.3431319160242876).epsilon(1e-13));
    for (double phi : {0.3, 1.7, 4.0}) CHECK(rel_err(bergman_annulus(0.5, std::polar(0.7, phi)), k) < 1e-13);
    double prev = 0.0;
    for (double r : {0.9, 0.99, 0.999, 0.9999}) {
      const double v = bergman_annulus(0.5, r);
      CHECK(v > 10.0 * prev);
      prev = v;
    }
    CHECK(code_of([] { bergman_annulus(0.5, 1.0 - 1e-12); }) == ErrorCode::kPole);
  }

  TEST_CASE("disc family") {
    ThetaSpec spec;
    for (cd zeta : {cd(0.0, 0.0), cd(0.3, 0.2), cd(-0.5, 0.1)}) {
      const double th = spec.theta(zeta);
      const cd center = -std::polar(1.0, th);
      CHECK(bergman_disc_family(zeta, center, spec) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
      for (cd w : {cd(0.5, 0.1), cd(-0.2, 0.7), cd(0.999, 0.0)}) {
        const cd z = center + w;
        CHECK(rel_err(bergman_disc_family(zeta, z, spec), disc_kernel(w)) < 1e-9);
        const double g = 1.0 - std::norm(w);
        CHECK(bergman_disc_family(zeta, z, spec) * g * g == doctest::Approx(1.0 / kPi).epsilon(1e-9));
      }
    }
    ThetaSpec quad{{cd(1.0, 0.0), cd(0.0, 0.5)}};
    CHECK(quad.theta(cd(0.2, 0.1)) == doctest::Approx(0.2 - 0.5 * 0.04).epsilon(1e-15));
  }

  TEST_CASE("slit disc") {
    for (cd zeta : {cd(0.9, 0.0), cd(0.8, 0.2), cd(0.95, -0.1)}) {
      const double t = slit_params(zeta).t;
      CHECK(rel_err(bergman_slit(zeta, 0.0), std::exp(2.0 * t) / kPi) < 1e-12);
    }
    auto gen = bkl::test::rng();
    int checked = 0;
    std::uniform_real_distribution<double> u(-0.45, 0.45);
    for (int i = 0; i < 2000 && checked < 100; ++i) {
      const cd zeta = 1.0 + cd(u(gen), u(gen));
      const cd z = random_disc_point(gen, 0.99);
      if (!admissible(Family::kSlit, zeta) || !contains({Family::kSlit, zeta, z})) continue;
      CHECK(bergman_slit(zeta, z) >= disc_kernel(z) * (1.0 - 1e-12));
      ++checked;
    }
    CHECK(checked == 100);
  }

  TEST_CASE("rectangle") {
    const cd zeta(1.2, 0.9);
    const RectangleModulus rm = solve_modulus(zeta);
    for (cd z : {cd(0.3, 0.2), cd(0.6, 0.45), cd(1.0, 0.1), cd(0.1, 0.8)}) {
      const double k = bergman_rectangle(zeta, z);
      CHECK(rel_err(bergman_rectangle(zeta, cd(zeta.real() - z.real(), z.imag())), k) < 1e-11);
      CHECK(rel_err(bergman_rectangle(zeta, cd(z.real(), zeta.imag() - z.imag())), k) < 1e-11);
      const double s = rm.K / zeta.real();
      const auto j = bkl::special::jacobi(s * z, rm.modulus);
      const cd d = 2.0 * j.sn * j.cn * j.dn * s;
      const double im = (j.sn * j.sn).imag();
      CHECK(rel_err(k, std::norm(d) / (4.0 * kPi * im * im)) < 1e-12);
    }
  }

  TEST_CASE("half strip") {
    const cd zeta(1.1, 0.0);
    auto gen = bkl::test::rng();
    std::uniform_real_distribution<double> x(0.01, 1.09), y(0.01, 5.0);
    for (int i = 0; i < 200; ++i) {
      const cd z(x(gen), y(gen));
      const double k = bergman_halfstrip(zeta, z);
      CHECK(k > 0.0);
      CHECK(rel_err(bergman_halfstrip(zeta, cd(zeta.real() - z.real(), z.imag())), k) < 1e-11);
    }
    double prev = bergman_halfstrip(zeta, cd(0.55, 1.0));
    for (double yy = 1.25; yy <= 5.0; yy += 0.25) {
      const double v = bergman_halfstrip(zeta, cd(0.55, yy));
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("dispatch") {
    CHECK(bergman_kernel({Family::kAnnulus, 0.5, 0.7}) == bergman_annulus(0.5, 0.7));
    CHECK(bergman_kernel({Family::kHalfStrip, 1.0, cd(0.5, 1.0)}) ==
          bergman_halfstrip(1.0, cd(0.5, 1.0)));
  }
}
