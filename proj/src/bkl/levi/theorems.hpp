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

// Desk-scale reproduction of the boundary-limit statements, one row per
// claim.

#pragma once

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "bkl/levi/probe.hpp"

namespace bkl::levi {

enum class TargetKind {
  kValue,        // |estimate - target| <= tolerance
  kInfinity,     // probe flagged divergence
  kOrder,        // |fitted order - target| <= tolerance
  kGreater,      // estimate > target
  kNonNegative,  // estimate >= -tolerance
};

const char* to_string(TargetKind k) noexcept;

// NaN marks a field the row does not evaluate.
struct TheoremRow {
  int theorem = 0;
  std::string claim;        // short identifier, e.g. "z->1"
  std::string description;  // what the row checks
  Family family = Family::kAnnulus;
  cdouble zeta;  // last evaluated parameter
  cdouble z;     // last evaluated point
  double kernel = std::numeric_limits<double>::quiet_NaN();
  TargetKind kind = TargetKind::kValue;
  double target = 0.0;
  double tolerance = 0.0;
  double estimate = 0.0;
  bool diverged = false;
  double order = std::numeric_limits<double>::quiet_NaN();
  double order_stderr = std::numeric_limits<double>::quiet_NaN();
  double h = std::numeric_limits<double>::quiet_NaN();
  double richardson_error = std::numeric_limits<double>::quiet_NaN();
  Evaluator evaluator = Evaluator::kFiniteDifference;
  bool pass = false;
  std::string error;  // non-empty if the probe itself failed
};

// Throws Error(kInvalidArgument) unless 1 <= n <= 6.
std::vector<TheoremRow> reproduce_theorem(int n, const ProbeConfig& cfg = {});

// Value of 2x^2 + 2(x cot 2x - 1/2)^2, the half-strip tail limit at
// x = pi Re z / 2.
double halfstrip_tail_limit(double x);

}  // namespace bkl::levi
