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

#include "lagssm/basis.hpp"

#include "lagssm/detail/legendre_recurrence.hpp"
#include "lagssm/errors.hpp"

namespace lagssm {

BasisSpec make_basis(std::size_t n_basis, BasisFamily family) {
  BasisSpec spec{family, n_basis};
  validate(spec);
  return spec;
}

void validate(const BasisSpec& spec) {
  if (spec.n_basis < 1 || spec.n_basis > kMaxBasisSize) {
    throw ArgumentError("basis size must be in [1, 256], got " + std::to_string(spec.n_basis));
  }
  if (spec.family != BasisFamily::LegendreShifted) throw ArgumentError("unsupported basis family");
}

std::string to_string(BasisFamily family) {
  switch (family) {
    case BasisFamily::LegendreShifted:
      return "legendre_shifted";
  }
  return "unknown";
}

namespace {

void check_index(const BasisSpec& spec, std::size_t n) {
  validate(spec);
  if (n >= spec.n_basis) {
    throw ArgumentError("basis index " + std::to_string(n) + " out of range for N = " +
                        std::to_string(spec.n_basis));
  }
}

}  // namespace

double eval_phi(const BasisSpec& spec, std::size_t n, double z) {
  check_index(spec, n);
  const double x = detail::legendre_argument(z);
  double p_prev = 0.0;
  double p = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = detail::bonnet_next(static_cast<double>(k), x, p, p_prev);
    p_prev = p;
    p = next;
  }
  return detail::normalization(n) * p;
}

double eval_phi_deriv(const BasisSpec& spec, std::size_t n, double z) {
  check_index(spec, n);
  const double x = detail::legendre_argument(z);
  double p_prev = 0.0;
  double p = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = detail::bonnet_next(static_cast<double>(k), x, p, p_prev);
    p_prev = p;
    p = next;
  }
  return (2.0 * detail::normalization(n)) *
         detail::legendre_slope(static_cast<double>(n), x, p, p_prev);
}

std::vector<double> eval_phi_all(const BasisSpec& spec, double z) {
  validate(spec);
  std::vector<double> out(spec.n_basis);
  const double x = detail::legendre_argument(z);
  double p_prev = 0.0;
  double p = 1.0;
  for (std::size_t n = 0; n < spec.n_basis; ++n) {
    out[n] = detail::normalization(n) * p;
    const double next = detail::bonnet_next(static_cast<double>(n), x, p, p_prev);
    p_prev = p;
    p = next;
  }
  return out;
}

std::vector<double> boundary_values(const BasisSpec& spec) {
  validate(spec);
  std::vector<double> out(spec.n_basis);
  for (std::size_t n = 0; n < spec.n_basis; ++n) out[n] = detail::normalization(n);
  return out;
}

}  // namespace lagssm
