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

#include "bkl/domains/families.hpp"
#include "bkl/error.hpp"
#include "bkl/oracles/oracles.hpp"
#include "bkl/special/elliptic.hpp"
#include "bkl/special/weierstrass.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bkl::oracles;
using bkl::ErrorCode;
using bkl::test::rel_err;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

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

}  // namespace

TEST_SUITE("laurent annulus oracle") {
  TEST_CASE("matches the Weierstrass kernel") {
    const OracleValue v = laurent_annulus_kernel(0.5, 0.7);
    CHECK(rel_err(v.value, bkl::domains::bergman_annulus(0.5, 0.7)) < 1e-9);
    CHECK(v.bound < 1e-12 * v.value);
  }

  TEST_CASE("rotation invariance") {
    const double v = laurent_annulus_kernel(0.4, 0.8).value;
    for (double phi : {0.5, 2.0, 5.0}) {
      CHECK(rel_err(laurent_annulus_kernel(0.4, std::polar(0.8, phi)).value, v) < 1e-14);
    }
  }

  TEST_CASE("small inner radius approaches the disc kernel") {
    // The n = -1 term 1 / (2 pi |z|^2 log(1/r)) dominates, so the approach is
    // logarithmic; the next term is about r^2 / (pi |z|^4).
    double prev = 1.0;
    for (double r : {1e-2, 1e-4, 1e-6}) {
      const double err = laurent_annulus_kernel(r, 0.5).value - disc_kernel(0.5);
      CHECK(err < prev);
      CHECK(std::abs(err - 1.0 / (2.0 * kPi * 0.25 * std::log(1.0 / r))) < 2.0 * r * r / (kPi * 0.0625));
      prev = err;
    }
  }

  TEST_CASE("refuses when the tail cannot be certified") {
    OracleConfig cfg;
    cfg.truncation = 5;
    CHECK(code_of([&] { laurent_annulus_kernel(0.5, 0.999, cfg); }) == ErrorCode::kOracleRefused);
    CHECK(code_of([] { laurent_annulus_kernel(0.5, 0.3); }) == ErrorCode::kDomain);
  }
}

TEST_SUITE("gram-schmidt oracle") {
  TEST_CASE("unit square against the elliptic-function kernel") {
    const cd zeta(1.0, 1.0), z(0.5, 0.5);
    const GramSchmidtResult g = gram_schmidt_kernel(zeta, z, 40);
    CHECK(rel_err(g.value, bkl::domains::bergman_rectangle(zeta, z)) < 1e-4);
    for (std::size_t i = 1; i < g.partial_sums.size(); ++i) {
      CHECK(g.partial_sums[i] >= g.partial_sums[i - 1]);
    }
  }

  TEST_CASE("disc calibration") {
    const GramSchmidtResult g = gram_schmidt_disc_kernel(0.3, 30);
    CHECK(rel_err(g.value, disc_kernel(0.3)) < 1e-6);
  }

  TEST_CASE("argument checks") {
    CHECK(code_of([] { gram_schmidt_kernel(cd(1.0, 1.0), cd(2.0, 0.5), 10); }) == ErrorCode::kDomain);
    CHECK(code_of([] { gram_schmidt_kernel(cd(1.0, 1.0), cd(0.5, 0.5), -1); }) ==
          ErrorCode::kInvalidArgument);
  }
}

TEST_SUITE("quadrature oracle") {
  TEST_CASE("endpoint values") {
    CHECK(quadrature_K(0.0).value == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(quadrature_E(1.0).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(code_of([] { quadrature_K(1.0); }) == ErrorCode::kConvergence);
  }

  TEST_CASE("agrees with AGM") {
    for (int i = 1; i <= 9; ++i) {
      const double k = i / 10.0;
      CHECK(std::abs(quadrature_K(k).value - bkl::special::complete_K(k)) < 1e-12);
      CHECK(std::abs(quadrature_E(k).value - bkl::special::complete_E(k)) < 1e-12);
    }
  }
}

TEST_SUITE("lattice oracle") {
  const bkl::special::Lattice L(0.7);
  OracleConfig wide;

  TEST_CASE("matches the q-series") {
    wide.truncation = 1000;
    wide.tolerance = 1e-8;
    const cd u(0.3 * 0.7, 0.0);
    const OracleComplex p = lattice_p(u, L, wide);
    CHECK(rel_err(p.value, bkl::special::weierstrass_p(u, L)) < 1e-8);
    const cd v(0.2, 0.9);
    CHECK(rel_err(lattice_p(v, L, wide).value, bkl::special::weierstrass_p(v, L)) < 1e-8);
    CHECK(rel_err(lattice_zeta(v, L, wide).value, bkl::special::weierstrass_zeta(v, L)) < 1e-7);
  }

  TEST_CASE("parity") {
    wide.truncation = 1000;
    wide.tolerance = 1e-8;
    const cd u(0.21, 0.4);
    CHECK(std::abs(lattice_p(-u, L, wide).value - lattice_p(u, L, wide).value) <
          1e-10 * std::abs(lattice_p(u, L, wide).value));
    CHECK(std::abs(lattice_zeta(-u, L, wide).value + lattice_zeta(u, L, wide).value) <
          1e-10 * std::abs(lattice_zeta(u, L, wide).value));
  }

  TEST_CASE("refuses when the tail bound exceeds the tolerance") {
    OracleConfig tight;
    tight.truncation = 10;
    tight.tolerance = 1e-14;
    CHECK(code_of([&] { lattice_p(cd(0.3, 0.0), L, tight); }) == ErrorCode::kOracleRefused);
  }
}

TEST_SUITE("slit inner closed form") {
  TEST_CASE("vanishes on the unit circle away from 1") {
    CHECK(std::abs(slit_inner_limit(cd(0.0, 1.0 - 1e-9))) < 1e-6);
    CHECK(slit_inner_limit(cd(1.0 - 1e-3, 0.0)) > 1e3);
  }
}
