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

// Default guard radii shared by the evaluators. Callers probing boundary
// limits can pass their own.
namespace bkl {

inline constexpr double kPoleRadius = 1e-8;
inline constexpr double kBoundaryGuard = 1e-10;
inline constexpr double kSlitBand = 1e-12;
inline constexpr double kDiscBoundaryGuard = 1e-12;

}  // namespace bkl
