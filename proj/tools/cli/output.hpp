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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "run_config.hpp"

namespace bkl::cli {

using ojson = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// One output row. NaN fields are empty in CSV and null in JSON.
struct Record {
  std::string family;
  std::optional<cdouble> zeta;
  std::optional<cdouble> z;
  double kernel = kNaN;
  double levi = kNaN;
  std::string method;
  double h = kNaN;
  double rich_err = kNaN;
  std::string claim;
  double target = kNaN;
  bool target_infinite = false;
  std::optional<bool> pass;
  bool diverged = false;
  ojson extra = ojson::object();  // JSON-only fields, appended in order
};

struct Output {
  std::vector<Record> records;
  std::optional<ojson> json_records;  // replaces records in JSON output
  std::optional<ojson> summary;
  int exit_code = 0;
};

// Doubles as JSON: NaN -> null, +-inf -> "inf" / "-inf".
ojson number(double v);
ojson complex_value(cdouble v);

extern const char* const kCsvColumns;

std::string render_json(const RunConfig& cfg, const Output& out, const std::string& version);
std::string render_csv(const Output& out);

}  // namespace bkl::cli
