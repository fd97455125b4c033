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

#include "bkl/special/weierstrass.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bkl/error.hpp"

namespace bkl::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 100000;

// Sums over n >= 1 shared by P, zeta and eta1 at the reduced argument v.
struct NomeSums {
  double eta;     // sum n Q_n
  cdouble cos_n;  // sum n Q_n cos(2 n v)
  cdouble sin_n;  // sum Q_n sin(2 n v)
};

NomeSums nome_sums(cdouble v, double omega1) {
  const double log_q2 = -2.0 * kPi * kPi / omega1;
  NomeSums s{0.0, 0.0, 0.0};
  for (int n = 1; n <= kMaxTerms; ++n) {
    const double p = std::exp(n * log_q2);
    const double Q = p / -std::expm1(n * log_q2);
    const cdouble c = std::cos(2.0 * n * v);
    const cdouble sn = std::sin(2.0 * n * v);
    const double t_eta = n * Q;
    const cdouble t_cos = t_eta * c;
    const cdouble t_sin = Q * sn;
    s.eta += t_eta;
    s.cos_n += t_cos;
    s.sin_n += t_sin;
    const double tail = std::max({t_eta, std::abs(t_cos), std::abs(t_sin)});
    if (tail <= kEps * 1e-3 || (n > 2 && tail <= kEps * (std::abs(s.cos_n) + s.eta + 1.0) * 1e-2)) {
      return s;
    }
  }
  fail(ErrorCode::kConvergence, "nome series did not converge");
}

double eta1_from(double omega1, double sum_eta) {
  return kPi * kPi / (12.0 * omega1) * (1.0 - 24.0 * sum_eta);
}

struct Reduced {
  cdouble u;
  double m;  // multiples of 2*omega1 removed
  double n;  // multiples of 2*pi*i removed
};

Reduced reduce(cdouble u, double omega1, double pole_radius) {
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) {
    fail(ErrorCode::kDomain, "weierstrass: non-finite argument");
  }
  const double m = std::round(u.real() / (2.0 * omega1));
  const double n = std::round(u.imag() / (2.0 * kPi));
  const cdouble r = u - cdouble(2.0 * m * omega1, 2.0 * n * kPi);
  if (std::abs(r) < pole_radius) {
    fail(ErrorCode::kPole, "weierstrass: argument within pole radius of a lattice point");
  }
  return {r, m, n};
}

}  // namespace

Lattice::Lattice(double omega1) : omega1_(omega1) {
  if (!(omega1 > 0.0) || !std::isfinite(omega1)) {
    fail(ErrorCode::kDomain, "lattice half-period omega1 must be positive");
  }
}

cdouble Lattice::omega2() const noexcept { return {0.0, kPi}; }

cdouble weierstrass_p(cdouble u, const Lattice& L, double pole_radius) {
  const double w = L.omega1();
  const Reduced r = reduce(u, w, pole_radius);
  const double A = kPi / (2.0 * w);
  const cdouble v = A * r.u;
  const NomeSums s = nome_sums(v, w);
  const cdouble sv = std::sin(v);
  return -eta1_from(w, s.eta) / w + A * A * (1.0 / (sv * sv) - 8.0 * s.cos_n);
}

cdouble weierstrass_zeta(cdouble u, const Lattice& L, double pole_radius) {
  const double w = L.omega1();
  const Reduced r = reduce(u, w, pole_radius);
  const double A = kPi / (2.0 * w);
  const cdouble v = A * r.u;
  const NomeSums s = nome_sums(v, w);
  const double eta1 = eta1_from(w, s.eta);
  // Legendre relation eta1*omega2 - eta2*omega1 = i*pi/2.
  const cdouble eta2(0.0, kPi * (eta1 - 0.5) / w);
  const cdouble reduced = eta1 * r.u / w + A * (std::cos(v) / std::sin(v) + 4.0 * s.sin_n);
  return reduced + 2.0 * r.m * eta1 + 2.0 * r.n * eta2;
}

double weierstrass_eta1(const Lattice& L) {
  const double w = L.omega1();
  return eta1_from(w, nome_sums(0.0, w).eta);
}

double robin_c(double omega1) {
  const Lattice L(omega1);
  return weierstrass_eta1(L) / omega1;
}

WpPlusC wp_plus_c_with_derivatives(double u, double omega1) {
  const Lattice L(omega1);
  const double w = omega1;
  if (!(u > 0.0 && u < 2.0 * w)) {
    fail(ErrorCode::kDomain, "wp_plus_c_with_derivatives: u must lie in (0, 2 omega1)");
  }
  // G(w) = A(w)^2 B(w), v = A u = pi u / (2w): v' = -v/w, v'' = 2v/w^2.
  const double A = kPi / (2.0 * w);
  const double v = A * u;
  const double v1 = -v / w;
  const double v2 = 2.0 * v / (w * w);

  const double sv = std::sin(v), cv = std::cos(v);
  const double csc2 = 1.0 / (sv * sv);
  const double cot = cv / sv;
  // f(v) = csc^2 v, f' = -2 csc^2 cot, f'' = 2 csc^2 (2 cot^2 + csc^2).
  const double f = csc2;
  const double fv = -2.0 * csc2 * cot;
  const double fvv = 2.0 * csc2 * (2.0 * cot * cot + csc2);
  double B = f;
  double B1 = fv * v1;
  double B2 = fvv * v1 * v1 + fv * v2;

  const double log_q2 = -2.0 * kPi * kPi / w;
  double S = 0.0, S1 = 0.0, S2 = 0.0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    const double p = std::exp(n * log_q2);
    const double om = -std::expm1(n * log_q2);  // 1 - p
    // dp/dw = p * beta, beta = 2 n pi^2 / w^2, beta' = -2 beta / w.
    const double beta = 2.0 * n * kPi * kPi / (w * w);
    const double p1 = p * beta;
    const double p2 = p * (beta * beta - 2.0 * beta / w);
    const double Q = p / om;
    const double Q1 = p1 / (om * om);
    const double Q2 = p2 / (om * om) + 2.0 * p1 * p1 / (om * om * om);
    const double g = std::cos(2.0 * n * v);
    const double gs = std::sin(2.0 * n * v);
    const double g1 = -2.0 * n * gs * v1;
    const double g2 = -4.0 * n * n * g * v1 * v1 - 2.0 * n * gs * v2;
    const double t = n * Q * g;
    const double t1 = n * (Q1 * g + Q * g1);
    const double t2 = n * (Q2 * g + 2.0 * Q1 * g1 + Q * g2);
    S += t;
    S1 += t1;
    S2 += t2;
    const double tail = std::max({std::abs(t), std::abs(t1), std::abs(t2)});
    if (tail <= kEps * 1e-2 * (std::abs(B) + std::abs(B1) + std::abs(B2))) break;
    if (n == kMaxTerms) fail(ErrorCode::kConvergence, "omega-derivative series did not converge");
  }
  B -= 8.0 * S;
  B1 -= 8.0 * S1;
  B2 -= 8.0 * S2;

  // A = pi/(2w): A' = -A/w, A'' = 2A/w^2, so (A^2)' = -2A^2/w, (A^2)'' = 6A^2/w^2.
  const double A2 = A * A;
  return {A2 * B, A2 * (B1 - 2.0 * B / w), A2 * (B2 - 4.0 * B1 / w + 6.0 * B / (w * w))};
}

}  // namespace bkl::special
