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

namespace bkl {

// Numeric error categories. The C API maps these one-to-one onto bkl_status.
enum class ErrorCode {
  kDomain = 1,          // argument outside the mathematical domain
  kPole,                // within the pole radius of a pole
  kBranchCut,           // on a branch cut of a multivalued inverse
  kBoundaryGuard,       // too close to the boundary of the domain
  kParameter,           // family parameter zeta not admissible
  kStencil,             // finite-difference stencil leaves the admissible set
  kConvergence,         // iteration or series did not converge
  kInsufficientPoints,  // not enough usable points for a fit
  kIllConditioned,      // orthonormalization lost too many digits
  kOracleRefused,       // oracle truncation bound above tolerance
  kInvalidArgument,     // malformed input (sizes, enum values, ...)
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bkl
