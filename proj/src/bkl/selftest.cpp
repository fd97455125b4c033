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

#include "bkl/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "bkl/domains/families.hpp"
#include "bkl/error.hpp"
#include "bkl/levi/levi.hpp"
#include "bkl/oracles/oracles.hpp"
#include "bkl/special/elliptic.hpp"
#include "bkl/special/jacobi.hpp"
#include "bkl/special/weierstrass.hpp"

namespace bkl {

namespace {

using cdouble = std::complex<double>;

SelftestCheck run(const std::string& name, double tol, const std::function<double()>& measure) {
  try {
    const double m = measure();
    return {name, m, tol, std::isfinite(m) && m <= tol, ""};
  } catch (const Error& e) {
    return {name, NAN, tol, false, e.what()};
  }
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SelftestCheck> out;

  out.push_back(run("legendre relation", 1e-12, [] {
    double worst = 0.0;
    for (double k = 0.2; k < 0.95; k += 0.1) {
      const auto v = special::complete_integrals(special::Modulus(k));
      worst = std::max(worst, std::abs(v.E * v.K_prime + v.E_prime * v.K - v.K * v.K_prime - M_PI / 2));
    }
    return worst;
  }));

  out.push_back(run("AGM vs quadrature K, E", 1e-12, [] {
    double worst = 0.0;
    for (double k = 0.1; k < 0.95; k += 0.1) {
      worst = std::max(worst, std::abs(special::complete_K(k) - oracles::quadrature_K(k).value));
      worst = std::max(worst, std::abs(special::complete_E(k) - oracles::quadrature_E(k).value));
    }
    return worst;
  }));

  out.push_back(run("annulus Weierstrass vs Laurent", 1e-9, [] {
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double r = 0.3 + 0.1 * i;
      for (int j = 0; j < 5; ++j) {
        const double x = r + (1.0 - r) * (j + 1) / 6.0;
        const double a = domains::bergman_annulus(r, x);
        worst = std::max(worst, rel(a, oracles::laurent_annulus_kernel(r, x).value));
      }
    }
    return worst;
  }));

  out.push_back(run("rectangle vs Gram-Schmidt", 1e-4, [] {
    const cdouble pts[] = {{0.5, 0.5}, {0.3, 0.4}, {0.6, 0.7}, {0.35, 0.65}, {0.7, 0.3}};
    double worst = 0.0;
    for (const cdouble& z : pts) {
      const double a = domains::bergman_rectangle({1.0, 1.0}, z);
      worst = std::max(worst, rel(oracles::gram_schmidt_kernel({1.0, 1.0}, z, 40).value, a));
    }
    return worst;
  }));

  out.push_back(run("Gram-Schmidt disc control", 1e-6, [] {
    const double exact = 1.0 / (M_PI * 0.91 * 0.91);
    return rel(oracles::gram_schmidt_disc_kernel(0.3, 40).value, exact);
  }));

  out.push_back(run("q-series vs lattice-sum P", 1e-8, [] {
    double worst = 0.0;
    for (double w : {0.4, 0.7, 1.0}) {
      const special::Lattice L(w);
      for (cdouble u : {cdouble(0.3 * w, 0.0), cdouble(0.5 * w, 0.7)}) {
        oracles::OracleConfig cfg;
        cfg.truncation = 1000;
        cfg.tolerance = 1e-8;
        const cdouble q = special::weierstrass_p(u, L);
        worst = std::max(worst, std::abs(oracles::lattice_p(u, L, cfg).value - q) / std::abs(q));
      }
    }
    return worst;
  }));

  out.push_back(run("F(sn(u)) = u", 1e-11, [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const special::Modulus m(0.05 + 0.9 * unit(rng));
      const double u = special::complete_K(m) * (0.02 + 0.96 * unit(rng));
      const double sn = special::jacobi_real(u, m).sn;
      worst = std::max(worst, std::abs(special::incomplete_F(sn, m).real() - u));
    }
    return worst;
  }));

  out.push_back(run("sn^2 + cn^2 = 1, dn^2 + k^2 sn^2 = 1", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const special::Modulus m(0.05 + 0.9 * unit(rng));
      const auto v = special::complete_integrals(m);
      const cdouble u(v.K * (2.0 * unit(rng) - 1.0), v.K_prime * 0.95 * unit(rng));
      const auto j = special::jacobi(u, m);
      const double k2 = m.k() * m.k();
      const double s = std::max(1.0, std::norm(j.sn));
      worst = std::max({worst, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0) / s,
                        std::abs(j.dn * j.dn + k2 * j.sn * j.sn - 1.0) / s});
    }
    return worst;
  }));

  out.push_back(run("slit inner limit vs closed form", 1e-6, [] {
    double worst = 0.0;
    for (cdouble z : {cdouble(0.3, 0.0), cdouble(0.0, 0.5), cdouble(-0.4, 0.2), cdouble(0.2, -0.6)}) {
      const double a = oracles::slit_inner_limit(z);
      worst = std::max(worst, std::abs(levi::levi_slit_inner(z).value - a) / std::max(1.0, std::abs(a)));
    }
    return worst;
  }));

  out.push_back(run("annulus exact Levi vs finite difference", 1e-6, [] {
    double worst = 0.0;
    for (double x : {0.6, 0.7, 0.85}) {
      const double a = levi::levi_annulus_exact(0.5, x).value;
      worst = std::max(worst, rel(levi::levi_fd(domains::Family::kAnnulus, 0.5, x, {}, 1e-3).value, a));
    }
    return worst;
  }));

  return out;
}

}  // namespace bkl
