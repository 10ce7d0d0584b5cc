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

// Built with -mavx2 -mfma -ffp-contract=off. Only dot uses FMA; every other
// kernel mirrors the scalar operation order lane by lane.

#if defined(LAGSSM_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_impl.hpp"
#include "lagssm/detail/legendre_recurrence.hpp"

namespace lagssm::kernels::avx2 {
namespace {

inline double reduce_add(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double sum = reduce_add(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(a + r * cols, x, cols);
}

void legendre_table(std::size_t n_basis, const double* z, std::size_t count, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d x = _mm256_sub_pd(_mm256_mul_pd(two, _mm256_loadu_pd(z + i)), one);
    __m256d p_prev = _mm256_setzero_pd();
    __m256d p = one;
    for (std::size_t n = 0; n < n_basis; ++n) {
      const double nd = static_cast<double>(n);
      _mm256_storeu_pd(out + n * count + i,
                       _mm256_mul_pd(_mm256_set1_pd(detail::normalization(n)), p));
      const __m256d lead = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0 * nd + 1.0), x), p);
      const __m256d trail = _mm256_mul_pd(_mm256_set1_pd(nd), p_prev);
      const __m256d next = _mm256_div_pd(_mm256_sub_pd(lead, trail), _mm256_set1_pd(nd + 1.0));
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
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d minus_one = _mm256_set1_pd(-1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d x = _mm256_sub_pd(_mm256_mul_pd(two, _mm256_loadu_pd(z + i)), one);
    const __m256d at_right = _mm256_cmp_pd(x, one, _CMP_EQ_OQ);
    const __m256d at_left = _mm256_cmp_pd(x, minus_one, _CMP_EQ_OQ);
    const __m256d denom = _mm256_sub_pd(_mm256_mul_pd(x, x), one);
    __m256d p_prev = _mm256_setzero_pd();
    __m256d p = one;
    for (std::size_t n = 0; n < n_basis; ++n) {
      const double nd = static_cast<double>(n);
      const double magnitude = 0.5 * nd * (nd + 1.0);
      const double left_value = (n % 2 == 1) ? magnitude : -magnitude;
      __m256d slope = _mm256_div_pd(
          _mm256_mul_pd(_mm256_set1_pd(nd), _mm256_sub_pd(_mm256_mul_pd(x, p), p_prev)), denom);
      slope = _mm256_blendv_pd(slope, _mm256_set1_pd(magnitude), at_right);
      slope = _mm256_blendv_pd(slope, _mm256_set1_pd(left_value), at_left);
      _mm256_storeu_pd(out + n * count + i,
                       _mm256_mul_pd(_mm256_set1_pd(2.0 * detail::normalization(n)), slope));
      const __m256d lead = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0 * nd + 1.0), x), p);
      const __m256d trail = _mm256_mul_pd(_mm256_set1_pd(nd), p_prev);
      const __m256d next = _mm256_div_pd(_mm256_sub_pd(lead, trail), _mm256_set1_pd(nd + 1.0));
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

}  // namespace lagssm::kernels::avx2

#endif  // LAGSSM_HAVE_AVX2
