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

#include "bkl/levi/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bkl/error.hpp"

namespace bkl::levi {

const char* to_string(Evaluator e) noexcept {
  switch (e) {
    case Evaluator::kFiniteDifference: return "fd";
    case Evaluator::kAnnulusAnalytic: return "analytic";
    case Evaluator::kAnnulusExact: return "exact";
    case Evaluator::kSlitInner: return "fd-inner";
  }
  return "unknown";
}

ApproachPath geometric_path(Family family, cdouble zeta, cdouble target, cdouble direction,
                            double d0, const ProbeConfig& cfg, Evaluator ev) {
  ApproachPath p;
  p.family = family;
  p.evaluator = ev;
  const cdouble dir = direction / std::abs(direction);
  double d = d0;
  for (int j = 0; j < cfg.steps; ++j, d *= cfg.ratio) {
    p.zeta_path.push_back(zeta);
    p.z_path.push_back(target + d * dir);
    p.distance.push_back(d);
  }
  return p;
}

SlopeFit loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  // Exact zeros (values below the difference-quotient floor) carry no slope.
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] > 0.0 && y[i] != 0.0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(std::abs(y[i])));
    }
  }
  const std::size_t n = lx.size();
  if (n < 2) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double slope = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - my - slope * (lx[i] - mx);
    rss += r * r;
  }
  const double se = n > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
  return {slope, se};
}

double aitken_limit(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  if (n < 3) return v.back();
  const double a = v[n - 3], b = v[n - 2], c = v[n - 1];
  const double den = (c - b) - (b - a);
  if (std::abs(den) <= 1e-14 * (std::abs(a) + std::abs(b) + std::abs(c))) return c;
  const double lim = c - (c - b) * (c - b) / den;
  return std::isfinite(lim) ? lim : c;
}

LimitReport probe_limit(const ApproachPath& path, const ProbeConfig& cfg) {
  const std::size_t n = path.z_path.size();
  if (path.distance.size() != n ||
      (path.evaluator != Evaluator::kSlitInner && path.zeta_path.size() != n)) {
    fail(ErrorCode::kInvalidArgument, "probe_limit: path sequences differ in length");
  }
  LimitReport rep;
  for (std::size_t j = 0; j < n; ++j) {
    const cdouble z = path.z_path[j];
    const cdouble zeta = path.evaluator == Evaluator::kSlitInner ? cdouble(1.0, 0.0) : path.zeta_path[j];
    LeviEstimate est;
    try {
      switch (path.evaluator) {
        case Evaluator::kFiniteDifference:
          est = levi_fd(path.family, zeta, z, cfg.theta, cfg.h);
          break;
        case Evaluator::kAnnulusAnalytic: est = levi_annulus_analytic(zeta, z); break;
        case Evaluator::kAnnulusExact: est = levi_annulus_exact(zeta, z); break;
        case Evaluator::kSlitInner: est = levi_slit_inner(z, cfg.h); break;
      }
    } catch (const Error& e) {
      // Guard and stencil failures end the usable part of the path.
      if (e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kParameter) throw;
      break;
    }
    if (!std::isfinite(est.value)) break;
    rep.estimates.push_back(est);
    rep.zeta.push_back(zeta);
    rep.z.push_back(z);
    rep.distance.push_back(path.distance[j]);
  }
  if (rep.estimates.size() < 4) {
    fail(ErrorCode::kInsufficientPoints, "probe_limit: fewer than four usable points on the path");
  }

  std::vector<double> values;
  bool positive = true;
  for (const LeviEstimate& e : rep.estimates) {
    values.push_back(e.value);
    positive = positive && e.value > 0.0;
  }
  const SlopeFit fit = loglog_slope(rep.distance, values);
  rep.fitted_order = fit.slope;
  rep.slope_stderr = fit.standard_error;

  bool monotone = positive;
  for (std::size_t j = 1; j < values.size() && monotone; ++j) monotone = values[j] > values[j - 1];
  const double decades = std::log10(rep.distance.front() / rep.distance.back());
  rep.diverged = monotone && decades >= kDivergenceDecades - 1e-9 && fit.slope <= kDivergenceSlope;
  rep.fitted_limit = rep.diverged ? std::numeric_limits<double>::infinity() : aitken_limit(values);
  return rep;
}

}  // namespace bkl::levi
