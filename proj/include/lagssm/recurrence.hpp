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

// Online memory recurrence
//
//   c_{t+delta} = A c_t + b u_{t+delta}                       (Dirac, ZOH)
//   c_{t+delta} = A c_t + v_next u_{t+delta} + v_prev u_t     (FOH)
//
// with A in state orientation (lower triangular for the exponential warp; see
// recurrence_transition in matrices.hpp), reconstruction of the compressed
// history, and the direct-projection oracle.
//
// Trace timing: sample k (0-based) is stamped k*delta and holds over
// [k*delta, (k+1)*delta). The state after consuming samples 0..k has
// t = (k+1)*delta.

#ifndef LAGSSM_RECURRENCE_HPP
#define LAGSSM_RECURRENCE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lagssm/basis.hpp"
#include "lagssm/linalg.hpp"
#include "lagssm/matrices.hpp"
#include "lagssm/quadrature.hpp"
#include "lagssm/warp.hpp"

namespace lagssm {

struct MemoryState {
  Vector coeffs;
  double t = 0.0;
};

MemoryState zero_state(std::size_t n_basis);

/// Uniformly sampled signal. times[k] = t0 + k*delta.
struct SignalTrace {
  std::vector<double> times;
  std::vector<double> values;
  double delta = 0.0;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  /// End of the last hold interval.
  double end_time() const;
};

/// Builds a trace stamped t0 + k*delta. Throws ArgumentError for delta <= 0.
SignalTrace make_trace(std::vector<double> values, double delta, double t0 = 0.0);

/// Throws ArgumentError unless times are strictly increasing with spacing
/// delta (within 1e-12) and every value is finite.
void validate(const SignalTrace& trace);

struct DiscreteSystem {
  Matrix transition;  // state orientation
  InputVectors input;
  double delta = 0.0;
};

/// Lag-operator system: transition = a_corrected^T, input from build_b_delta.
DiscreteSystem make_lag_system(const DiscreteMatrices& m);

/// Bilinear-discretized HiPPO-LegS reference; input model reported as ZOH.
DiscreteSystem make_hippo_bilinear_system(std::size_t n_basis, double delta);

/// One update. u_prev is required iff the system uses an FOH pair.
MemoryState step(const MemoryState& state, const DiscreteSystem& sys, double u_next,
                 std::optional<double> u_prev = std::nullopt);

/// Folds step over the trace from the zero state at t = 0 and returns every
/// intermediate state. Under FOH the sample before the first is taken as 0.
std::vector<MemoryState> run(const SignalTrace& trace, const DiscreteSystem& sys);

/// Same fold, keeping only the final state.
MemoryState run_final(const SignalTrace& trace, const DiscreteSystem& sys);

/// u_hat(s) = sum_n c_n phi_n(sigma_t(s)). Throws DomainError if any s > t.
std::vector<double> reconstruct(const MemoryState& state, const BasisSpec& basis,
                                const WarpSpec& warp, std::span<const double> s_grid);

using TimeFunction = std::function<double(double)>;

/// c_n = integral over (0,1] of phi_n(z) u(sigma_t^{-1}(z)) dz.
MemoryState project_direct(const TimeFunction& u, const BasisSpec& basis, const WarpSpec& warp,
                           double t, const QuadratureConfig& quad = {});

/// As above, with the integral split at the images of the given times
/// (those in (-inf, t) are used). Piecewise-smooth inputs such as a ZOH
/// history are then integrated panel-exactly.
MemoryState project_direct(const TimeFunction& u, const BasisSpec& basis, const WarpSpec& warp,
                           double t, std::span<const double> breakpoints,
                           const QuadratureConfig& quad = {});

}  // namespace lagssm

#endif  // LAGSSM_RECURRENCE_HPP
