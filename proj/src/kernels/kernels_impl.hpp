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

// Internal: per-ISA entry points. Only the scalar set is always compiled.

#ifndef LAGSSM_SRC_KERNELS_IMPL_HPP
#define LAGSSM_SRC_KERNELS_IMPL_HPP

#include <cstddef>

namespace lagssm::kernels {

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void legendre_table(std::size_t n_basis, const double* z, std::size_t count, double* out);
void legendre_deriv_table(std::size_t n_basis, const double* z, std::size_t count, double* out);
}  // namespace scalar

#if defined(LAGSSM_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void legendre_table(std::size_t n_basis, const double* z, std::size_t count, double* out);
void legendre_deriv_table(std::size_t n_basis, const double* z, std::size_t count, double* out);
}  // namespace avx2
#endif

#if defined(LAGSSM_HAVE_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void legendre_table(std::size_t n_basis, const double* z, std::size_t count, double* out);
void legendre_deriv_table(std::size_t n_basis, const double* z, std::size_t count, double* out);
}  // namespace neon
#endif

}  // namespace lagssm::kernels

#endif  // LAGSSM_SRC_KERNELS_IMPL_HPP
