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

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace bkl::cli {

using cdouble = std::complex<double>;

// Raised for malformed configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Axis {
  double from = 0.0;
  double to = 0.0;
  int n = 0;

  std::vector<double> points() const;
  bool operator==(const Axis&) const = default;
};

struct RunConfig {
  std::string command = "eval";
  std::string family = "annulus";
  cdouble zeta{0.5, 0.0};
  cdouble z{0.7, 0.0};
  std::vector<cdouble> theta{cdouble(1.0, 0.0)};
  double h = 1e-3;
  double eta = 1e-6;
  double tol = 0.0;
  std::string format = "json";
  std::string out;

  // levi: fd | analytic | exact | inner
  std::string method = "fd";
  // reproduce
  int theorem = 0;
  // probe
  cdouble target{1.0, 0.0};
  cdouble direction{-1.0, 0.0};
  double d0 = 0.1;
  std::string evaluator = "fd";
  // sweep: grid | slit-profile | halfstrip-tail
  std::string sweep = "grid";
  Axis re{0.0, 0.0, 0};
  Axis im{0.0, 0.0, 0};
  Axis axis{0.0, 0.0, 0};

  std::uint64_t seed = 20260101;

  bool operator==(const RunConfig&) const = default;

  // Throws ConfigError on any inconsistency.
  void validate() const;
};

// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i", "a,b" and "(a,b)".
cdouble parse_complex(const std::string& text);

nlohmann::json to_json(const RunConfig& cfg);
// Accepts a bare config object or a whole output document with a "header".
// Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

}  // namespace bkl::cli
