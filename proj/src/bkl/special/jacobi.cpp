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

#include "bkl/special/jacobi.hpp"

#include <cmath>
#include <limits>

#include "bkl/error.hpp"

namespace bkl::special {

namespace {

// Bulirsch's descending Landen scheme (Numer. Math. 7, 1965) for
// 0 <= x <= K/2 and complementary parameter mc = k'^2 in (0,1).
JacobiReal sncndn_core(double x, double mc) {
  constexpr int kMaxSteps = 16;
  const double tol = std::sqrt(std::numeric_limits<double>::epsilon()) * 0.01;
  double m[kMaxSteps];
  double n[kMaxSteps];
  int l = 0;
  double c = 1.0;
  for (double a = 1.0; l < kMaxSteps; ++l) {
    m[l] = a;
    n[l] = mc = std::sqrt(mc);
    c = 0.5 * (a + mc);
    if (!(std::abs(a - mc) > tol * a)) {
      ++l;
      break;
    }
    mc *= a;
    a = c;
  }
  x *= c;
  double sn = std::sin(x);
  double cn = std::cos(x);
  double dn = 1.0;
  if (sn != 0.0) {
    double a = cn / sn;
    c *= a;
    while (l--) {
      const double b = m[l];
      a *= c;
      c *= dn;
      dn = (n[l] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = sn < 0 ? -a : a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

}  // namespace

JacobiReal jacobi_real(double x, const Modulus& m) {
  return jacobi_real(x, m, complete_K(m));
}

JacobiReal jacobi_real(double x, const Modulus& m, double K) {
  const double kp = m.k_prime();
  // Period 4K: bring x into [-2K, 2K].
  x -= 4.0 * K * std::round(x / (4.0 * K));
  const double sign = x < 0 ? -1.0 : 1.0;
  x = std::abs(x);
  // sn(2K - y) = sn y, cn(2K - y) = -cn y, dn(2K - y) = dn y.
  double cn_sign = 1.0;
  if (x > K) {
    x = 2.0 * K - x;
    cn_sign = -1.0;
  }
  JacobiReal r;
  if (x > 0.5 * K) {
    const JacobiReal s = sncndn_core(K - x, kp * kp);
    r = {s.cn / s.dn, kp * s.sn / s.dn, kp / s.dn};
  } else {
    r = sncndn_core(x, kp * kp);
  }
  return {sign * r.sn, cn_sign * r.cn, r.dn};
}

JacobiTriple jacobi(cdouble u, const Modulus& m, double pole_radius) {
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) {
    fail(ErrorCode::kDomain, "jacobi: non-finite argument");
  }
  const EllipticValues ev = complete_integrals(m);
  const double K = ev.K;
  const double Kp = ev.K_prime;
  const double k = m.k();

  const double pm = std::round(u.real() / (2.0 * K));
  const double pn = std::round((u.imag() / Kp - 1.0) / 2.0);
  const cdouble pole(2.0 * pm * K, (2.0 * pn + 1.0) * Kp);
  if (std::abs(u - pole) < pole_radius) {
    fail(ErrorCode::kPole, "jacobi: argument within pole radius of a pole of sn");
  }

  const JacobiReal a = jacobi_real(u.real(), m, K);
  const JacobiReal b = jacobi_real(u.imag(), m.complement(), Kp);
  const double s = a.sn, c = a.cn, d = a.dn;
  const double s1 = b.sn, c1 = b.cn, d1 = b.dn;
  const double den = c1 * c1 + k * k * s * s * s1 * s1;

  JacobiTriple t;
  t.sn = cdouble(s * d1, c * d * s1 * c1) / den;
  t.cn = cdouble(c * c1, -s * d * s1 * d1) / den;
  t.dn = cdouble(d * c1 * d1, -k * k * s * c * s1) / den;
  t.u = u;
  t.k = k;
  return t;
}

}  // namespace bkl::special
