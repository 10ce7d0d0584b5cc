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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"
#include "lagssm/errors.hpp"
#include "lagssm/kernels.hpp"

namespace lagssm::kernels {
namespace {

constexpr KernelTable kScalar{"scalar",
                              &scalar::dot,
                              &scalar::axpy,
                              &scalar::gemv,
                              &scalar::legendre_table,
                              &scalar::legendre_deriv_table};

#if defined(LAGSSM_HAVE_AVX2)
constexpr KernelTable kAvx2{"avx2",
                            &avx2::dot,
                            &avx2::axpy,
                            &avx2::gemv,
                            &avx2::legendre_table,
                            &avx2::legendre_deriv_table};
#endif

#if defined(LAGSSM_HAVE_NEON)
constexpr KernelTable kNeon{"neon",
                            &neon::dot,
                            &neon::axpy,
                            &neon::gemv,
                            &neon::legendre_table,
                            &neon::legendre_deriv_table};
#endif

const KernelTable* best_available() noexcept {
  if (const KernelTable* t = avx2_kernels()) return t;
  if (const KernelTable* t = neon_kernels()) return t;
  return &kScalar;
}

const KernelTable* by_name(std::string_view name) noexcept {
  if (name == "scalar") return &kScalar;
  if (name == "avx2") return avx2_kernels();
  if (name == "neon") return neon_kernels();
  return nullptr;
}

const KernelTable* initial_selection() noexcept {
  if (const char* env = std::getenv("LAGSSM_KERNELS")) {
    if (const KernelTable* t = by_name(env)) return t;
  }
  return best_available();
}

std::atomic<const KernelTable*>& active_slot() noexcept {
  static std::atomic<const KernelTable*> slot{initial_selection()};
  return slot;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable* avx2_kernels() noexcept {
#if defined(LAGSSM_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() noexcept {
#if defined(LAGSSM_HAVE_NEON)
  return &kNeon;  // baseline on aarch64
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&kScalar};
  if (const KernelTable* t = avx2_kernels()) out.push_back(t);
  if (const KernelTable* t = neon_kernels()) out.push_back(t);
  return out;
}

const KernelTable& active_kernels() noexcept { return *active_slot().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) noexcept {
  const KernelTable* t = by_name(name);
  if (t == nullptr) return false;
  active_slot().store(t, std::memory_order_release);
  return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("dot: length mismatch");
  return active_kernels().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw ArgumentError("axpy: length mismatch");
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

void gemv(std::span<const double> a, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y) {
  if (a.size() != rows * cols || x.size() != cols || y.size() != rows) {
    throw ArgumentError("gemv: shape mismatch");
  }
  active_kernels().gemv(a.data(), rows, cols, x.data(), y.data());
}

std::vector<double> legendre_table(std::size_t n_basis, std::span<const double> z) {
  std::vector<double> out(n_basis * z.size());
  active_kernels().legendre_table(n_basis, z.data(), z.size(), out.data());
  return out;
}

std::vector<double> legendre_deriv_table(std::size_t n_basis, std::span<const double> z) {
  std::vector<double> out(n_basis * z.size());
  active_kernels().legendre_deriv_table(n_basis, z.data(), z.size(), out.data());
  return out;
}

}  // namespace lagssm::kernels
