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

#include "kernels_impl.hpp"

#include "lagssm/detail/legendre_recurrence.hpp"

namespace lagssm::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(a + r * cols, x, cols);
}

void legendre_table(std::size_t n_basis, const double* z, std::size_t count, double* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const double x = detail::legendre_argument(z[i]);
    double p_prev = 0.0;
    double p = 1.0;
    for (std::size_t n = 0; n < n_basis; ++n) {
      out[n * count + i] = detail::normalization(n) * p;
      const double next = detail::bonnet_next(static_cast<double>(n), x, p, p_prev);
      p_prev = p;
      p = next;
    }
  }
}

void legendre_deriv_table(std::size_t n_basis, const double* z, std::size_t count, double* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const double x = detail::legendre_argument(z[i]);
    double p_prev = 0.0;
    double p = 1.0;
    for (std::size_t n = 0; n < n_basis; ++n) {
      const double slope = detail::legendre_slope(static_cast<double>(n), x, p, p_prev);
      out[n * count + i] = (2.0 * detail::normalization(n)) * slope;
      const double next = detail::bonnet_next(static_cast<double>(n), x, p, p_prev);
      p_prev = p;
      p = next;
    }
  }
}

}  // namespace lagssm::kernels::scalar
