// Copyright 2026 The lagssm Authors.
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

// Orthonormal basis on the canonical interval (0, 1]:
//
//   phi_n(z) = sqrt(2n+1) P_n(2z - 1),   n = 0 .. N-1
//
// Evaluation is valid for any real z; the transition matrices evaluate phi at
// lagged arguments e^delta z > 1, where the polynomial extension is intended.

#ifndef LAGSSM_BASIS_HPP
#define LAGSSM_BASIS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace lagssm {

enum class BasisFamily { LegendreShifted };

inline constexpr std::size_t kMaxBasisSize = 256;

struct BasisSpec {
  BasisFamily family = BasisFamily::LegendreShifted;
  std::size_t n_basis = 1;

  bool operator==(const BasisSpec&) const = default;
};

/// Validated constructor; throws ArgumentError unless 1 <= n_basis <= 256.
BasisSpec make_basis(std::size_t n_basis, BasisFamily family = BasisFamily::LegendreShifted);
void validate(const BasisSpec& spec);

std::string to_string(BasisFamily family);

double eval_phi(const BasisSpec& spec, std::size_t n, double z);
double eval_phi_deriv(const BasisSpec& spec, std::size_t n, double z);

/// [phi_0(z), ..., phi_{N-1}(z)] in one recurrence pass.
std::vector<double> eval_phi_all(const BasisSpec& spec, double z);

/// phi_n(1) = sqrt(2n+1).
std::vector<double> boundary_values(const BasisSpec& spec);

}  // namespace lagssm

#endif  // LAGSSM_BASIS_HPP
