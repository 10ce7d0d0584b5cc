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

// aarch64 only (float64x2_t needs A64). Same equivalence contract as AVX2.

#if defined(LAGSSM_HAVE_NEON)

#include <arm_neon.h>

#include "kernels_impl.hpp"
#include "lagssm/detail/legendre_recurrence.hpp"

namespace lagssm::kernels::neon {

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(a + r * cols, x, cols);
}

void legendre_table(std::size_t n_basis, const double* z, std::size_t count, double* out) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t x = vsubq_f64(vmulq_f64(two, vld1q_f64(z + i)), one);
    float64x2_t p_prev = vdupq_n_f64(0.0);
    float64x2_t p = one;
    for (std::size_t n = 0; n < n_basis; ++n) {
      const double nd = static_cast<double>(n);
      vst1q_f64(out + n * count + i, vmulq_f64(vdupq_n_f64(detail::normalization(n)), p));
      const float64x2_t lead = vmulq_f64(vmulq_f64(vdupq_n_f64(2.0 * nd + 1.0), x), p);
      const float64x2_t trail = vmulq_f64(vdupq_n_f64(nd), p_prev);
      const float64x2_t next = vdivq_f64(vsubq_f64(lead, trail), vdupq_n_f64(nd + 1.0));
      p_prev = p;
      p = next;
    }
  }
  for (; i < count; ++i) {
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
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t minus_one = vdupq_n_f64(-1.0);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t x = vsubq_f64(vmulq_f64(two, vld1q_f64(z + i)), one);
    const uint64x2_t at_right = vceqq_f64(x, one);
    const uint64x2_t at_left = vceqq_f64(x, minus_one);
    const float64x2_t denom = vsubq_f64(vmulq_f64(x, x), one);
    float64x2_t p_prev = vdupq_n_f64(0.0);
    float64x2_t p = one;
    for (std::size_t n = 0; n < n_basis; ++n) {
      const double nd = static_cast<double>(n);
      const double magnitude = 0.5 * nd * (nd + 1.0);
      const double left_value = (n % 2 == 1) ? magnitude : -magnitude;
      float64x2_t slope =
          vdivq_f64(vmulq_f64(vdupq_n_f64(nd), vsubq_f64(vmulq_f64(x, p), p_prev)), denom);
      slope = vbslq_f64(at_right, vdupq_n_f64(magnitude), slope);
      slope = vbslq_f64(at_left, vdupq_n_f64(left_value), slope);
      vst1q_f64(out + n * count + i,
                vmulq_f64(vdupq_n_f64(2.0 * detail::normalization(n)), slope));
      const float64x2_t lead = vmulq_f64(vmulq_f64(vdupq_n_f64(2.0 * nd + 1.0), x), p);
      const float64x2_t trail = vmulq_f64(vdupq_n_f64(nd), p_prev);
      const float64x2_t next = vdivq_f64(vsubq_f64(lead, trail), vdupq_n_f64(nd + 1.0));
      p_prev = p;
      p = next;
    }
  }
  for (; i < count; ++i) {
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

}  // namespace lagssm::kernels::neon

#endif  // LAGSSM_HAVE_NEON
