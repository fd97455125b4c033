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

#include "bkl/special/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "bkl/error.hpp"

namespace bkl::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAgmSteps = 64;

struct AgmResult {
  double K;
  double E;
};

// Gauss AGM on (1, k') with the running sum of 2^(n-1) c_n^2 for E.
AgmResult agm(const Modulus& m) {
  double a = 1.0;
  double b = m.k_prime();
  double c = m.k();
  double sum = 0.5 * c * c;
  double pow2 = 0.5;
  for (int n = 0; n < kMaxAgmSteps; ++n) {
    if (std::abs(a - b) <= kEps * a) {
      const double K = std::numbers::pi / (2.0 * a);
      return {K, K * (1.0 - sum)};
    }
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  fail(ErrorCode::kConvergence, "AGM did not converge");
}

}  // namespace

Modulus::Modulus(double k) : k_(k), kp_(0.0) {
  if (!(k > 0.0 && k < 1.0)) {
    std::ostringstream msg;
    msg << "modulus k must lie in (0,1), got " << std::setprecision(17) << k;
    fail(ErrorCode::kDomain, msg.str());
  }
  kp_ = std::sqrt((1.0 - k) * (1.0 + k));
}

Modulus Modulus::from_pair(double k, double kp) {
  // k may round to 1 when k' is tiny; the pair still carries k' exactly.
  if (!(k > 0.0 && k <= 1.0 && kp > 0.0 && kp < 1.0)) {
    fail(ErrorCode::kDomain, "modulus pair outside (0,1)");
  }
  if (std::abs(k * k + kp * kp - 1.0) > 8.0 * kEps) {
    fail(ErrorCode::kDomain, "k^2 + k'^2 != 1 for modulus pair");
  }
  return Modulus(k, kp, 0);
}

Modulus Modulus::from_angle(double angle) {
  if (!(angle > 0.0 && angle < std::numbers::pi / 2)) {
    fail(ErrorCode::kDomain, "modulus angle must lie in (0, pi/2)");
  }
  return Modulus(std::sin(angle), std::cos(angle), 0);
}

double complete_K(const Modulus& m) { return agm(m).K; }

double complete_E(const Modulus& m) { return agm(m).E; }

EllipticValues complete_integrals(const Modulus& m) {
  const AgmResult p = agm(m);
  const AgmResult q = agm(m.complement());
  return {p.K, p.E, q.K, q.E};
}

double complete_K(double k) {
  if (k == 0.0) return std::numbers::pi / 2;
  return complete_K(Modulus(k));
}

double complete_E(double k) {
  if (k == 0.0) return std::numbers::pi / 2;
  if (k == 1.0) return 1.0;
  return complete_E(Modulus(k));
}

double dK_dk(const Modulus& m) {
  const AgmResult r = agm(m);
  const double kp2 = m.k_prime() * m.k_prime();
  return (r.E - kp2 * r.K) / (m.k() * kp2);
}

double dE_dk(const Modulus& m) {
  const AgmResult r = agm(m);
  return (r.E - r.K) / m.k();
}

cdouble carlson_rf(cdouble x, cdouble y, cdouble z) {
  // Carlson (1995), duplication until the Taylor remainder is below eps.
  const double tol = std::pow(3.0 * kEps, -1.0 / 6.0);
  const cdouble x0 = x, y0 = y;
  cdouble A0 = (x + y + z) / 3.0;
  double Q = tol * std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)});
  cdouble A = A0;
  double scale = 1.0;
  for (int n = 0; n < 100; ++n) {
    if (Q * scale < std::abs(A)) break;
    const cdouble sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const cdouble lam = sx * sy + sy * sz + sz * sx;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    A = 0.25 * (A + lam);
    scale *= 0.25;
  }
  const cdouble X = (A0 - x0) * scale / A;
  const cdouble Y = (A0 - y0) * scale / A;
  const cdouble Z = -(X + Y);
  const cdouble E2 = X * Y - Z * Z;
  const cdouble E3 = X * Y * Z;
  return (1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0) / std::sqrt(A);
}

cdouble incomplete_F(cdouble w, const Modulus& m) {
  const double k = m.k();
  if (w == cdouble(1.0)) return complete_K(m);
  if (w == cdouble(0.0)) return 0.0;
  if (w.imag() == 0.0) {
    const double x = std::abs(w.real());
    if (x == 1.0 || x == 1.0 / k) {
      fail(ErrorCode::kDomain, "incomplete_F: singular endpoint");
    }
    if (x > 1.0) fail(ErrorCode::kBranchCut, "incomplete_F: argument on a branch cut");
  }
  const cdouble w2 = w * w;
  return w * carlson_rf(1.0 - w2, 1.0 - k * k * w2, 1.0);
}

}  // namespace bkl::special
