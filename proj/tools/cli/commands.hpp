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

#include <stdexcept>
#include <string>

#include "output.hpp"
#include "run_config.hpp"

namespace bkl::cli {

// Library refusal for a requested point; maps to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs cfg.command. Throws ConfigError or DomainError; failed claims are
// reported through Output::exit_code instead.
Output run_command(const RunConfig& cfg);

std::string library_version();

}  // namespace bkl::cli
