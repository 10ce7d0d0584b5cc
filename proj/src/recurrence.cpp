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

#include "lagssm/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "lagssm/errors.hpp"
#include "lagssm/kernels.hpp"

namespace lagssm {

namespace {

constexpr double kSpacingTolerance = 1e-12;

void check_system(const DiscreteSystem& sys) {
  const std::size_t n = sys.transition.rows();
  if (n == 0 || !sys.transition.is_square()) {
    throw ArgumentError("transition must be a nonempty square matrix");
  }
  if (sys.input.v_next.size() != n) throw ArgumentError("input vector length does not match N");
  if (sys.input.is_pair() && sys.input.v_prev.size() != n) {
    throw ArgumentError("FOH v_prev length does not match N");
  }
  if (!(sys.delta > 0.0)) throw ArgumentError("system delta must be positive");
}

// Accumulates sum_i w_i u_i phi_n(z_i) over one segment into c.
void accumulate_segment(const TimeFunction& u, const BasisSpec& basis, const WarpSpec& warp,
                        double t, double za, double zb, const QuadratureConfig& quad, Vector& c) {
  const CompositeRule rule = composite_rule(za, zb, quad);
  const std::size_t count = rule.nodes.size();
  std::vector<double> wu(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = u(warp_inverse(warp, t, rule.nodes[i]));
    if (!std::isfinite(v)) throw EvaluationError("input is not finite", rule.nodes[i]);
    wu[i] = rule.weights[i] * v;
  }
  const std::vector<double> table = kernels::legendre_table(basis.n_basis, rule.nodes);
  Vector part(basis.n_basis);
  kernels::gemv(table, basis.n_basis, count, wu, part);
  kernels::axpy(1.0, part, c);
}

}  // namespace

MemoryState zero_state(std::size_t n_basis) { return {Vector(n_basis, 0.0), 0.0}; }

double SignalTrace::end_time() const {
  if (empty()) return times.empty() ? 0.0 : times.front();
  return times.front() + static_cast<double>(size()) * delta;
}

SignalTrace make_trace(std::vector<double> values, double delta, double t0) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ArgumentError("trace delta must be positive");
  SignalTrace tr;
  tr.delta = delta;
  tr.times.resize(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) tr.times[k] = t0 + static_cast<double>(k) * delta;
  tr.values = std::move(values);
  return tr;
}

void validate(const SignalTrace& trace) {
  if (!(trace.delta > 0.0) || !std::isfinite(trace.delta)) {
    throw ArgumentError("trace delta must be positive");
  }
  if (trace.times.size() != trace.values.size()) {
    throw ArgumentError("trace times and values differ in length");
  }
  for (std::size_t k = 0; k < trace.size(); ++k) {
    if (!std::isfinite(trace.values[k]) || !std::isfinite(trace.times[k])) {
      throw ArgumentError("trace has a non-finite entry at index " + std::to_string(k));
    }
    if (k == 0) continue;
    const double gap = trace.times[k] - trace.times[k - 1];
    if (!(gap > 0.0)) throw ArgumentError("trace times are not strictly increasing");
    const double expected = trace.times[0] + static_cast<double>(k) * trace.delta;
    if (std::abs(trace.times[k] - expected) > kSpacingTolerance * std::max(1.0, std::abs(expected))) {
      std::ostringstream msg;
      msg << "trace spacing is not uniform at index " << k << " (t = " << trace.times[k]
          << ", expected " << expected << ")";
      throw ArgumentError(msg.str());
    }
  }
}

DiscreteSystem make_lag_system(const DiscreteMatrices& m) {
  return {recurrence_transition(m.a_corrected), m.b_delta, m.delta};
}

DiscreteSystem make_hippo_bilinear_system(std::size_t n_basis, double delta) {
  const HippoReference ref = hippo_legs_reference(n_basis);
  DiscreteLti lti = bilinear_discretize(ref.a_hippo, ref.b_hippo, delta);
  InputVectors input;
  input.model = InputModel::ZOH;
  input.v_next = std::move(lti.b);
  return {std::move(lti.a), std::move(input), delta};
}

MemoryState step(const MemoryState& state, const DiscreteSystem& sys, double u_next,
                 std::optional<double> u_prev) {
  check_system(sys);
  const std::size_t n = sys.transition.rows();
  if (state.coeffs.size() != n) throw ArgumentError("state length does not match N");
  if (sys.input.is_pair() && !u_prev) throw ArgumentError("FOH step requires u_prev");
  if (!sys.input.is_pair() && u_prev) throw ArgumentError("u_prev is only used by FOH");

  MemoryState out{Vector(n), state.t + sys.delta};
  kernels::gemv(sys.transition.data(), n, n, state.coeffs, out.coeffs);
  kernels::axpy(u_next, sys.input.v_next, out.coeffs);
  if (sys.input.is_pair()) kernels::axpy(*u_prev, sys.input.v_prev, out.coeffs);
  return out;
}

std::vector<MemoryState> run(const SignalTrace& trace, const DiscreteSystem& sys) {
  if (trace.empty()) throw ArgumentError("run: empty trace");
  validate(trace);
  check_system(sys);
  std::vector<MemoryState> states;
  states.reserve(trace.size());
  MemoryState cur = zero_state(sys.transition.rows());
  double prev = 0.0;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const double u = trace.values[k];
    cur = sys.input.is_pair() ? step(cur, sys, u, prev) : step(cur, sys, u);
    cur.t = static_cast<double>(k + 1) * sys.delta;
    states.push_back(cur);
    prev = u;
  }
  return states;
}

MemoryState run_final(const SignalTrace& trace, const DiscreteSystem& sys) {
  if (trace.empty()) throw ArgumentError("run: empty trace");
  validate(trace);
  check_system(sys);
  MemoryState cur = zero_state(sys.transition.rows());
  double prev = 0.0;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const double u = trace.values[k];
    cur = sys.input.is_pair() ? step(cur, sys, u, prev) : step(cur, sys, u);
    prev = u;
  }
  cur.t = static_cast<double>(trace.size()) * sys.delta;
  return cur;
}

std::vector<double> reconstruct(const MemoryState& state, const BasisSpec& basis,
                                const WarpSpec& warp, std::span<const double> s_grid) {
  validate(basis);
  if (state.coeffs.size() != basis.n_basis) throw ArgumentError("state length does not match N");
  std::vector<double> z(s_grid.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = warp_forward(warp, state.t, s_grid[i]);
  const std::vector<double> table = kernels::legendre_table(basis.n_basis, z);
  std::vector<double> out(z.size(), 0.0);
  for (std::size_t n = 0; n < basis.n_basis; ++n) {
    kernels::axpy(state.coeffs[n], std::span<const double>(table.data() + n * z.size(), z.size()),
                  out);
  }
  return out;
}

MemoryState project_direct(const TimeFunction& u, const BasisSpec& basis, const WarpSpec& warp,
                           double t, const QuadratureConfig& quad) {
  return project_direct(u, basis, warp, t, std::span<const double>{}, quad);
}

MemoryState project_direct(const TimeFunction& u, const BasisSpec& basis, const WarpSpec& warp,
                           double t, std::span<const double> breakpoints,
                           const QuadratureConfig& quad) {
  validate(basis);
  validate(warp);
  if (!std::isfinite(t)) throw ArgumentError("project_direct: t must be finite");
  std::vector<double> cuts{0.0};
  for (double b : breakpoints) {
    if (b < t) {
      const double z = warp_forward(warp, t, b);
      if (z > 0.0) cuts.push_back(z);
    }
  }
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  MemoryState out{Vector(basis.n_basis, 0.0), t};
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    accumulate_segment(u, basis, warp, t, cuts[k], cuts[k + 1], quad, out.coeffs);
  }
  return out;
}

}  // namespace lagssm
