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

// Stationary time warps sigma_t(s) = f(s - t) from the history (-inf, t] onto
// the canonical interval (0, 1]. Each family supplies f, its inverse g, and both
// derivatives in closed form.
//
// Exponential family with rate tau:
//   f(x) = e^{x/tau}    g(z) = tau ln z    f'(x) = e^{x/tau}/tau    g'(z) = tau/z

#ifndef LAGSSM_WARP_HPP
#define LAGSSM_WARP_HPP

#include <string>

namespace lagssm {

enum class WarpFamily { Exponential };

struct WarpSpec {
  WarpFamily family = WarpFamily::Exponential;
  double rate = 1.0;  // tau > 0

  bool operator==(const WarpSpec&) const = default;

  double f(double x) const;
  double g(double z) const;
  double f_prime(double x) const;
  double g_prime(double z) const;
};

WarpSpec make_exponential_warp(double rate = 1.0);
void validate(const WarpSpec& warp);

std::string to_string(WarpFamily family);
/// Accepts "exp" and "exponential".
WarpFamily parse_warp_family(const std::string& name);

/// sigma_t(s) = f(s - t); requires s <= t.
double warp_forward(const WarpSpec& warp, double t, double s);

/// sigma_t^{-1}(z) = t + g(z); requires 0 < z <= 1.
double warp_inverse(const WarpSpec& warp, double t, double z);

/// Induced measure omega_t(s) = |sigma_t'(s)| = f'(s - t); requires s <= t.
double measure(const WarpSpec& warp, double t, double s);

/// Backward lag l(z) = sigma_t o sigma_{t+delta}^{-1}(z) = f(delta + g(z)).
/// The result exceeds 1 for delta > 0.
double lag(const WarpSpec& warp, double delta, double z);

}  // namespace lagssm

#endif  // LAGSSM_WARP_HPP
