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

#include "bkl/oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "bkl/error.hpp"

namespace bkl::oracles {

namespace {

constexpr double kPi = std::numbers::pi;

void refuse_if(double bound, double tol, const char* who) {
  if (!(bound <= tol)) {
    std::ostringstream msg;
    msg << who << ": truncation bound " << bound << " above tolerance " << tol;
    fail(ErrorCode::kOracleRefused, msg.str());
  }
}

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre on (a, b) from the Legendre zeros.
Rule gauss_legendre(int n, double a, double b) {
  const std::vector<double> pos = boost::math::legendre_p_zeros<double>(n);
  Rule r;
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  auto push = [&](double t) {
    const double dp = boost::math::legendre_p_prime<double>(n, t);
    r.x.push_back(mid + half * t);
    r.w.push_back(half * 2.0 / ((1.0 - t * t) * dp * dp));
  };
  for (double t : pos) {
    push(t);
    if (t != 0.0) push(-t);
  }
  return r;
}

// Orthonormalizes monomials ((x - c)/rho)^j sampled at the nodes and
// evaluates the kernel partial sums at z.
GramSchmidtResult orthonormalize(const std::vector<cdouble>& nodes, const std::vector<double>& weights,
                                 cdouble c, double rho, cdouble z, int degree) {
  const std::size_t m = nodes.size();
  const int n = degree + 1;
  std::vector<std::vector<cdouble>> basis;  // phi_j at the nodes
  std::vector<std::vector<cdouble>> coef;   // phi_j in the monomial basis
  auto inner = [&](const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    cdouble s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += weights[i] * a[i] * std::conj(b[i]);
    return s;
  };
  std::vector<cdouble> zpow(n);
  const cdouble zs = (z - c) / rho;
  zpow[0] = 1.0;
  for (int j = 1; j < n; ++j) zpow[j] = zpow[j - 1] * zs;

  GramSchmidtResult out{0.0, {}};
  std::vector<cdouble> v(m), xs(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = (nodes[i] - c) / rho;
    v[i] = 1.0;
  }
  for (int j = 0; j < n; ++j) {
    if (j > 0) {
      for (std::size_t i = 0; i < m; ++i) v[i] = std::pow(xs[i], j);
    }
    std::vector<cdouble> a(n, 0.0);
    a[j] = 1.0;
    const double before = std::sqrt(inner(v, v).real());
    // Twice is enough.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t q = 0; q < basis.size(); ++q) {
        const cdouble p = inner(v, basis[q]);
        for (std::size_t i = 0; i < m; ++i) v[i] -= p * basis[q][i];
        for (int i = 0; i < n; ++i) a[i] -= p * coef[q][i];
      }
    }
    const double after = std::sqrt(inner(v, v).real());
    if (!(after > 1e-8 * before)) {
      fail(ErrorCode::kIllConditioned, "gram_schmidt: more than 8 digits lost at degree " +
                                           std::to_string(j));
    }
    for (auto& x : v) x /= after;
    for (auto& x : a) x /= after;
    cdouble phi = 0.0;
    for (int i = 0; i <= j; ++i) phi += a[i] * zpow[i];
    out.value += std::norm(phi);
    out.partial_sums.push_back(out.value);
    basis.push_back(v);
    coef.push_back(a);
  }
  return out;
}

}  // namespace

OracleValue laurent_annulus_kernel(double r, cdouble z, const OracleConfig& cfg) {
  const double x = std::abs(z);
  if (!(r > 0.0 && r < x && x < 1.0)) {
    fail(ErrorCode::kDomain, "laurent_annulus_kernel: need 0 < r < |z| < 1");
  }
  const double x2 = x * x, q2 = (r / x) * (r / x), r2 = r * r;
  // n >= 0: (n+1) x^{2n} / (1 - r^{2n+2}); n = -(m+1), m >= 1:
  // m (r/x)^{2m} x^{-2} / (1 - r^{2m}).
  double sum = 1.0 / (2.0 * x2 * std::log(1.0 / r));
  double tp = 0.0, tn = 0.0;
  double bound = 0.0;
  for (int n = 0; n < cfg.truncation; ++n) {
    tp = (n + 1) * std::pow(x2, n) / -std::expm1((n + 1) * std::log(r2));
    const int mm = n + 1;
    tn = mm * std::pow(q2, mm) / (x2 * -std::expm1(mm * std::log(r2)));
    sum += tp + tn;
    // Later term ratios are at most x^2 (n+2)/(n+1) and (r/x)^2 (m+1)/m.
    const double rp = x2 * (n + 2.0) / (n + 1.0);
    const double rn = q2 * (mm + 1.0) / mm;
    bound = (rp < 1.0 ? tp * rp / (1.0 - rp) : INFINITY) + (rn < 1.0 ? tn * rn / (1.0 - rn) : INFINITY);
    if (bound <= 0.1 * cfg.tolerance * sum) break;
  }
  const double rel = bound / sum;
  refuse_if(rel, cfg.tolerance, "laurent_annulus_kernel");
  return {sum / kPi, rel};
}

GramSchmidtResult gram_schmidt_kernel(cdouble zeta, cdouble z, int degree, const OracleConfig& cfg) {
  if (!(zeta.real() > 0.0 && zeta.imag() > 0.0)) {
    fail(ErrorCode::kParameter, "gram_schmidt_kernel: need Re zeta, Im zeta > 0");
  }
  if (degree < 0 || degree > 60) fail(ErrorCode::kInvalidArgument, "gram_schmidt_kernel: need 0 <= D <= 60");
  if (!(z.real() > 0.0 && z.real() < zeta.real() && z.imag() > 0.0 && z.imag() < zeta.imag())) {
    fail(ErrorCode::kDomain, "gram_schmidt_kernel: z is not inside the rectangle");
  }
  const int q = std::max(cfg.quadrature_order, 2 * degree + 2);
  const Rule rx = gauss_legendre(q, 0.0, zeta.real());
  const Rule ry = gauss_legendre(q, 0.0, zeta.imag());
  std::vector<cdouble> nodes;
  std::vector<double> weights;
  for (std::size_t i = 0; i < rx.x.size(); ++i) {
    for (std::size_t j = 0; j < ry.x.size(); ++j) {
      nodes.emplace_back(rx.x[i], ry.x[j]);
      weights.push_back(rx.w[i] * ry.w[j]);
    }
  }
  return orthonormalize(nodes, weights, zeta / 2.0, std::abs(zeta) / 2.0, z, degree);
}

GramSchmidtResult gram_schmidt_disc_kernel(cdouble z, int degree, const OracleConfig& cfg) {
  if (degree < 0 || degree > 60) fail(ErrorCode::kInvalidArgument, "gram_schmidt_disc_kernel: need 0 <= D <= 60");
  if (!(std::abs(z) < 1.0)) fail(ErrorCode::kDomain, "gram_schmidt_disc_kernel: z is not inside the unit disc");
  const int q = std::max(cfg.quadrature_order, 2 * degree + 2);
  const Rule rr = gauss_legendre(q, 0.0, 1.0);
  const int na = 2 * q + 1;  // trapezoid in angle is exact for |e^{ik phi}|, k < na
  std::vector<cdouble> nodes;
  std::vector<double> weights;
  for (std::size_t i = 0; i < rr.x.size(); ++i) {
    for (int j = 0; j < na; ++j) {
      nodes.push_back(std::polar(rr.x[i], 2.0 * kPi * j / na));
      weights.push_back(rr.w[i] * rr.x[i] * 2.0 * kPi / na);
    }
  }
  return orthonormalize(nodes, weights, 0.0, 1.0, z, degree);
}

OracleValue quadrature_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    fail(ErrorCode::kConvergence, "quadrature_K: integrand not integrable at k = 1");
  }
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [k](double phi) { const double s = k * std::sin(phi); return 1.0 / std::sqrt(1.0 - s * s); },
      0.0, kPi / 2.0, 20, 1e-15, &err);
  refuse_if(err, 1e-12, "quadrature_K");
  return {v, err};
}

OracleValue quadrature_E(double k) {
  if (!(k >= 0.0 && k <= 1.0)) fail(ErrorCode::kDomain, "quadrature_E: need 0 <= k <= 1");
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [k](double phi) { const double s = k * std::sin(phi); return std::sqrt((1.0 - s) * (1.0 + s)); },
      0.0, kPi / 2.0, 20, 1e-15, &err);
  refuse_if(err, 1e-12, "quadrature_E");
  return {v, err};
}

namespace {

template <class Term>
OracleComplex lattice_sum(cdouble u, const special::Lattice& L, const OracleConfig& cfg, Term term,
                          cdouble principal, double tail_power) {
  const double a = 2.0 * L.omega1(), b = 2.0 * kPi;
  const double R = cfg.truncation * std::min(a, b);
  const int M = static_cast<int>(std::ceil(R / a)), N = static_cast<int>(std::ceil(R / b));
  cdouble sum = principal;
  for (int m = -M; m <= M; ++m) {
    for (int n = -N; n <= N; ++n) {
      if (m == 0 && n == 0) continue;
      const cdouble w(m * a, n * b);
      if (std::abs(w) > R) continue;
      if (std::abs(u - w) < kPoleRadius) fail(ErrorCode::kPole, "lattice sum: u at a lattice point");
      sum += term(w);
    }
  }
  // Circular truncation cancels the leading multipole terms; what remains is
  // the boundary discreteness, bounded here by the first non-cancelling
  // term summed over a shell of width one cell.
  const double cell = std::max(a, b);
  const double bound = 2.0 * kPi * R * cell / (a * b) * std::pow(std::abs(u), tail_power - 2.0) *
                       std::pow(R, -tail_power);
  const double rel = bound / std::abs(sum);
  refuse_if(rel, cfg.tolerance, "lattice sum");
  return {sum, rel};
}

}  // namespace

OracleComplex lattice_p(cdouble u, const special::Lattice& L, const OracleConfig& cfg) {
  if (std::abs(u) < kPoleRadius) fail(ErrorCode::kPole, "lattice_p: u at a lattice point");
  return lattice_sum(
      u, L, cfg,
      [u](cdouble w) { const cdouble d = u - w; return 1.0 / (d * d) - 1.0 / (w * w); },
      1.0 / (u * u), 4.0);
}

OracleComplex lattice_zeta(cdouble u, const special::Lattice& L, const OracleConfig& cfg) {
  if (std::abs(u) < kPoleRadius) fail(ErrorCode::kPole, "lattice_zeta: u at a lattice point");
  return lattice_sum(
      u, L, cfg, [u](cdouble w) { return 1.0 / (u - w) + 1.0 / w + u / (w * w); }, 1.0 / u, 4.0);
}

double slit_inner_limit(cdouble z) {
  if (!(std::abs(z) < 1.0) || z == cdouble(1.0)) fail(ErrorCode::kDomain, "slit_inner_limit: need |z| < 1");
  const cdouble d = 1.0 - z;
  const double first = 0.25 * ((1.0 + 2.0 * z - z * z) / (d * d)).real();
  const double n = std::norm(z);
  return first + 0.5 * n * ((1.0 + z) / d).real() / (1.0 - n);
}

}  // namespace bkl::oracles
