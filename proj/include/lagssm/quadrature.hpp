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

// Composite Gauss-Legendre quadrature on finite intervals.

#ifndef LAGSSM_QUADRATURE_HPP
#define LAGSSM_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace lagssm {

struct QuadratureConfig {
  int points_per_panel = 64;  // k in [2, 128]
  int panels = 8;             // p in [1, 1024]

  bool operator==(const QuadratureConfig&) const = default;
};

void validate(const QuadratureConfig& cfg);

/// Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Roots of P_k by Newton iteration from Chebyshev-like initial guesses, with
/// weights 2 / ((1 - x^2) P_k'(x)^2). Rules are built once per k and cached;
/// the returned reference stays valid for the life of the program.
const GaussRule& gauss_rule(int k);

/// Nodes and weights of the composite rule on [a, b]: p equal panels, k points each.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

CompositeRule composite_rule(double a, double b, const QuadratureConfig& cfg);

using Integrand = std::function<double(double)>;

/// Composite Gauss-Legendre estimate of the integral of fn over [a, b].
/// Throws ArgumentError if a > b, EvaluationError if fn is non-finite at a node.
double integrate(const Integrand& fn, double a, double b, const QuadratureConfig& cfg = {});

}  // namespace lagssm

#endif  // LAGSSM_QUADRATURE_HPP
