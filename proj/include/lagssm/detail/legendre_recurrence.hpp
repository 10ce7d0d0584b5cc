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

// Scalar building blocks of the Legendre recurrences. The SIMD kernels repeat
// exactly this operation order so that their results are bit-identical.

#ifndef LAGSSM_DETAIL_LEGENDRE_RECURRENCE_HPP
#define LAGSSM_DETAIL_LEGENDRE_RECURRENCE_HPP

#include <cmath>
#include <cstddef>

namespace lagssm::detail {

/// Canonical z in (0,1] to the Legendre argument x in (-1,1].
inline double legendre_argument(double z) { return 2.0 * z - 1.0; }

/// Bonnet: P_{n+1} = ((2n+1) x P_n - n P_{n-1}) / (n+1).
inline double bonnet_next(double n, double x, double p, double p_prev) {
  return ((2.0 * n + 1.0) * x * p - n * p_prev) / (n + 1.0);
}

/// P'_n(x) from P_n and P_{n-1}; the removable singularity at x = +-1 is
/// replaced by its limit (+-1)^(n+1) n(n+1)/2.
inline double legendre_slope(double n, double x, double p, double p_prev) {
  if (x == 1.0) return 0.5 * n * (n + 1.0);
  if (x == -1.0) {
    const double magnitude = 0.5 * n * (n + 1.0);
    return (static_cast<std::size_t>(n) % 2 == 1) ? magnitude : -magnitude;
  }
  return (n * (x * p - p_prev)) / (x * x - 1.0);
}

inline double normalization(std::size_t n) { return std::sqrt(2.0 * static_cast<double>(n) + 1.0); }

}  // namespace lagssm::detail

#endif  // LAGSSM_DETAIL_LEGENDRE_RECURRENCE_HPP
