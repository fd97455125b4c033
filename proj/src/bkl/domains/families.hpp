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

// The five parametrized domain families and their diagonal Bergman kernels.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace bkl::domains {

using cdouble = std::complex<double>;

enum class Family { kAnnulus, kDisc, kSlit, kRectangle, kHalfStrip };

const char* to_string(Family f) noexcept;
std::optional<Family> family_from_string(const std::string& name);

// Radius of the parameter ball around the distinguished base point.
inline constexpr double kParameterDelta = 0.5;

// theta(zeta) = Re(sum_{n>=1} a_n zeta^n). Default is Re zeta.
struct ThetaSpec {
  std::vector<cdouble> coefficients{cdouble(1.0, 0.0)};  // a_1, a_2, ...

  double theta(cdouble zeta) const;
  // d theta / d zeta = (1/2) sum n a_n zeta^(n-1).
  cdouble theta_zeta(cdouble zeta) const;
};

struct FamilyPoint {
  Family family;
  cdouble zeta;
  cdouble z;
};

bool admissible(Family f, cdouble zeta);

// Throws Error(kParameter) if zeta is not admissible.
bool contains(const FamilyPoint& p, const ThetaSpec& spec = {});

// Largest radius rho such that every zeta' with |zeta' - zeta| <= rho is
// admissible and still has z inside D_zeta'. Zero or negative if z is not
// inside D_zeta.
double stencil_room(const FamilyPoint& p, const ThetaSpec& spec = {});

double bergman_annulus(cdouble zeta, cdouble z);
double bergman_disc_family(cdouble zeta, cdouble z, const ThetaSpec& spec = {});
double bergman_slit(cdouble zeta, cdouble z);
double bergman_rectangle(cdouble zeta, cdouble z);
double bergman_halfstrip(cdouble zeta, cdouble z);

double bergman_kernel(const FamilyPoint& p, const ThetaSpec& spec = {});

}  // namespace bkl::domains
