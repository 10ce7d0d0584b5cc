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

// Test signals: the Lorenz63 x-trace and deterministic sine mixtures.

#ifndef LAGSSM_SIGNALS_HPP
#define LAGSSM_SIGNALS_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "lagssm/recurrence.hpp"

namespace lagssm {

using State3 = std::array<double, 3>;

inline constexpr double kMaxLorenzStep = 0.02;

struct LorenzParams {
  double sigma = 10.0;
  double rho = 28.0;
  double beta = 8.0 / 3.0;
  State3 x0 = {1.0, 1.0, 1.0};
  double dt = 0.01;
  std::size_t steps = 1000;
  std::size_t burn_in = 0;
};

void validate(const LorenzParams& p);

State3 lorenz_derivative(const LorenzParams& p, const State3& x);

/// One classic fourth-order Runge-Kutta step.
State3 rk4_step(const std::function<State3(const State3&)>& rhs, const State3& x, double dt);

/// Full trajectory after burn-in: element 0 is the state after burn_in steps,
/// followed by `steps - 1` further states. Throws NumericError on divergence.
std::vector<State3> lorenz63_trajectory(const LorenzParams& p);

/// x-component of lorenz63_trajectory, stamped k*dt.
SignalTrace lorenz63(const LorenzParams& p);

/// Samples of sum_i amps[i] sin(2 pi freqs[i] t + phases[i]) at t = k*delta.
SignalTrace sine_mixture(const std::vector<double>& freqs, const std::vector<double>& amps,
                         const std::vector<double>& phases, double delta, std::size_t steps);

/// Zero-order hold of the trace: sample k on [t_k, t_k + delta), 0 before the
/// first sample and from end_time() on.
TimeFunction zoh_function(const SignalTrace& trace);

/// Affine map to zero mean and unit max-abs. A constant trace maps to zeros.
SignalTrace normalize(const SignalTrace& trace);

}  // namespace lagssm

#endif  // LAGSSM_SIGNALS_HPP
