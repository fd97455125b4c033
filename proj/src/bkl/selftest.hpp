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

// Oracle cross-checks and identity suites behind `bkl selftest`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bkl {

struct SelftestCheck {
  std::string name;
  double measured;   // worst deviation observed
  double tolerance;
  bool pass;
  std::string error;
};

std::vector<SelftestCheck> run_selftest(std::uint64_t seed);

}  // namespace bkl
