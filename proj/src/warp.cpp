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

#include "lagssm/warp.hpp"

#include <cmath>

#include "lagssm/errors.hpp"

namespace lagssm {

double WarpSpec::f(double x) const { return std::exp(x / rate); }
double WarpSpec::g(double z) const { return rate * std::log(z); }
double WarpSpec::f_prime(double x) const { return std::exp(x / rate) / rate; }
double WarpSpec::g_prime(double z) const { return rate / z; }

WarpSpec make_exponential_warp(double rate) {
  WarpSpec w{WarpFamily::Exponential, rate};
  validate(w);
  return w;
}

void validate(const WarpSpec& warp) {
  if (!(warp.rate > 0.0) || !std::isfinite(warp.rate)) {
    throw ArgumentError("warp rate must be positive and finite");
  }
  if (warp.family != WarpFamily::Exponential) throw ArgumentError("unsupported warp family");
}

std::string to_string(WarpFamily family) {
  switch (family) {
    case WarpFamily::Exponential:
      return "exp";
  }
  return "unknown";
}

WarpFamily parse_warp_family(const std::string& name) {
  if (name == "exp" || name == "exponential") return WarpFamily::Exponential;
  throw ArgumentError("unknown warp family '" + name + "'");
}

namespace {

void require_canonical(double z) {
  if (!(z > 0.0 && z <= 1.0)) {
    throw DomainError("canonical coordinate must lie in (0, 1], got " + std::to_string(z));
  }
}

void require_past(double t, double s) {
  if (!(s <= t)) {
    throw DomainError("time s = " + std::to_string(s) + " lies after t = " + std::to_string(t));
  }
}

}  // namespace

double warp_forward(const WarpSpec& warp, double t, double s) {
  require_past(t, s);
  return warp.f(s - t);
}

double warp_inverse(const WarpSpec& warp, double t, double z) {
  require_canonical(z);
  return t + warp.g(z);
}

double measure(const WarpSpec& warp, double t, double s) {
  require_past(t, s);
  return warp.f_prime(s - t);
}

double lag(const WarpSpec& warp, double delta, double z) {
  require_canonical(z);
  if (!(delta >= 0.0)) throw ArgumentError("lag: delta must be nonnegative");
  // f(delta + g(z)) = z e^{delta/tau}; the closed form is exact at delta = 0.
  return z * std::exp(delta / warp.rate);
}

}  // namespace lagssm
