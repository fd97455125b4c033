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

#include "bkl/error.hpp"

namespace bkl {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kPole: return "pole";
    case ErrorCode::kBranchCut: return "branch-cut";
    case ErrorCode::kBoundaryGuard: return "boundary-guard";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kStencil: return "stencil";
    case ErrorCode::kConvergence: return "convergence";
    case ErrorCode::kInsufficientPoints: return "insufficient-points";
    case ErrorCode::kIllConditioned: return "ill-conditioned";
    case ErrorCode::kOracleRefused: return "oracle-refused";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace bkl
