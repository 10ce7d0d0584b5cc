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

// Data-parallel inner loops used by quadrature, matrix construction and the
// recurrence. Each kernel has a scalar reference implementation and optional
// SIMD variants (AVX2 on x86-64, NEON on aarch64). The variant is chosen once at
// first use from the running CPU; LAGSSM_KERNELS=scalar|avx2|neon overrides it.
//
// Equivalence contract:
//   - legendre_table, legendre_deriv_table, axpy: bit-identical across variants.
//   - dot, gemv: may differ from scalar by reassociation of the sum only.

#ifndef LAGSSM_KERNELS_HPP
#define LAGSSM_KERNELS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace lagssm::kernels {

struct KernelTable {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y = A x, A row-major rows x cols
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
  // out[n * count + i] = sqrt(2n+1) P_n(2 z_i - 1), n < n_basis
  void (*legendre_table)(std::size_t n_basis, const double* z, std::size_t count, double* out);
  // out[n * count + i] = d/dz of the above
  void (*legendre_deriv_table)(std::size_t n_basis, const double* z, std::size_t count,
                               double* out);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

/// Every variant usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

const KernelTable& active_kernels() noexcept;

/// Selects a variant by name ("scalar", "avx2", "neon"). Returns false and
/// leaves the selection unchanged if that variant is unavailable.
bool select_kernels(std::string_view name) noexcept;

// Convenience wrappers over the active table.

double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y);

/// Returns an n_basis x z.size() row-major table.
std::vector<double> legendre_table(std::size_t n_basis, std::span<const double> z);
std::vector<double> legendre_deriv_table(std::size_t n_basis, std::span<const double> z);

}  // namespace lagssm::kernels

#endif  // LAGSSM_KERNELS_HPP
