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

// Boundary-approach probes: evaluate the Levi form along a path, fit the
// limit and the log-log order.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bkl/levi/levi.hpp"

namespace bkl::levi {

enum class Evaluator {
  kFiniteDifference,  // levi_fd at zeta_path[j]
  kAnnulusAnalytic,   // closed form in P and c
  kAnnulusExact,      // levi_annulus_exact
  kSlitInner,         // levi_slit_inner, zeta_path ignored
};

const char* to_string(Evaluator e) noexcept;

struct ApproachPath {
  Family family = Family::kAnnulus;
  std::vector<cdouble> zeta_path;
  std::vector<cdouble> z_path;
  std::vector<double> distance;  // small variable used for the order fit
  Evaluator evaluator = Evaluator::kFiniteDifference;
  std::string description;
};

struct ProbeConfig {
  double eta = 1e-6;        // inner-limit surrogate offset
  double h = kDefaultStep;  // FD step before shrinking
  int steps = 12;
  double ratio = 0.5;
  ThetaSpec theta;
};

struct LimitReport {
  std::vector<LeviEstimate> estimates;
  std::vector<cdouble> zeta;
  std::vector<cdouble> z;
  std::vector<double> distance;
  double fitted_limit = 0.0;
  bool diverged = false;
  double fitted_order = 0.0;  // slope of log|value| against log(distance)
  double slope_stderr = 0.0;
};

// Divergence is declared when the values increase monotonically and grow
// at least ~10x per decade of distance over at least three decades.
inline constexpr double kDivergenceSlope = -0.98;
inline constexpr double kDivergenceDecades = 3.0;

// Geometric path z_j = target + d_j * direction, d_j = d0 * ratio^j, with
// zeta fixed at zeta.
ApproachPath geometric_path(Family family, cdouble zeta, cdouble target, cdouble direction,
                            double d0, const ProbeConfig& cfg,
                            Evaluator ev = Evaluator::kFiniteDifference);

// Throws Error(kInsufficientPoints) with fewer than four usable points.
LimitReport probe_limit(const ApproachPath& path, const ProbeConfig& cfg = {});

struct SlopeFit {
  double slope;
  double standard_error;
};
SlopeFit loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Aitken delta-squared on the last three values; falls back to the last value.
double aitken_limit(const std::vector<double>& values);

}  // namespace bkl::levi
