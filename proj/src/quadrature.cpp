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

#include "lagssm/quadrature.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "lagssm/detail/legendre_recurrence.hpp"
#include "lagssm/errors.hpp"
#include "lagssm/kernels.hpp"

namespace lagssm {

namespace {

constexpr int kMinPoints = 2;
constexpr int kMaxPoints = 128;
constexpr int kMaxPanels = 1024;
constexpr int kMaxNewtonIterations = 100;

struct LegendrePair {
  double value;  // P_k(x)
  double slope;  // P_k'(x)
};

LegendrePair legendre_with_slope(int k, double x) {
  double p_prev = 0.0;
  double p = 1.0;
  for (int n = 0; n < k; ++n) {
    const double next = detail::bonnet_next(static_cast<double>(n), x, p, p_prev);
    p_prev = p;
    p = next;
  }
  return {p, detail::legendre_slope(static_cast<double>(k), x, p, p_prev)};
}

GaussRule build_rule(int k) {
  GaussRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  const int half = (k + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
    if (k % 2 == 1 && i == half - 1) {
      x = 0.0;  // odd rules have an exact root at the origin
    } else {
      for (int it = 0; it < kMaxNewtonIterations; ++it) {
        const LegendrePair lp = legendre_with_slope(k, x);
        const double step = lp.value / lp.slope;
        x -= step;
        if (std::abs(step) <= 1e-16) break;
      }
    }
    const double slope = legendre_with_slope(k, x).slope;
    const double w = 2.0 / ((1.0 - x * x) * slope * slope);
    rule.nodes[i] = -x;
    rule.nodes[k - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[k - 1 - i] = w;
  }
  return rule;
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (cfg.points_per_panel < kMinPoints || cfg.points_per_panel > kMaxPoints) {
    throw ArgumentError("points_per_panel must be in [2, 128], got " +
                        std::to_string(cfg.points_per_panel));
  }
  if (cfg.panels < 1 || cfg.panels > kMaxPanels) {
    throw ArgumentError("panels must be in [1, 1024], got " + std::to_string(cfg.panels));
  }
}

const GaussRule& gauss_rule(int k) {
  if (k < kMinPoints || k > kMaxPoints) {
    throw ArgumentError("Gauss rule size must be in [2, 128], got " + std::to_string(k));
  }
  static std::array<std::once_flag, kMaxPoints + 1> once;
  static std::array<std::unique_ptr<const GaussRule>, kMaxPoints + 1> cache;
  std::call_once(once[k], [k] { cache[k] = std::make_unique<const GaussRule>(build_rule(k)); });
  return *cache[k];
}

CompositeRule composite_rule(double a, double b, const QuadratureConfig& cfg) {
  validate(cfg);
  if (!std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("integration limits must be finite");
  if (a > b) throw ArgumentError("integration limits out of order (a > b)");
  const GaussRule& rule = gauss_rule(cfg.points_per_panel);
  const std::size_t k = rule.nodes.size();
  const double width = (b - a) / cfg.panels;
  const double half = 0.5 * width;
  CompositeRule out;
  out.nodes.resize(k * cfg.panels);
  out.weights.resize(k * cfg.panels);
  for (int p = 0; p < cfg.panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + half;
    for (std::size_t i = 0; i < k; ++i) {
      out.nodes[p * k + i] = mid + half * rule.nodes[i];
      out.weights[p * k + i] = half * rule.weights[i];
    }
  }
  return out;
}

double integrate(const Integrand& fn, double a, double b, const QuadratureConfig& cfg) {
  const CompositeRule rule = composite_rule(a, b, cfg);
  std::vector<double> values(rule.nodes.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = fn(rule.nodes[i]);
    if (!std::isfinite(values[i])) {
      throw EvaluationError("integrand is not finite", rule.nodes[i]);
    }
  }
  return kernels::dot(rule.weights, values);
}

}  // namespace lagssm
