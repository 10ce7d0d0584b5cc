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

#include "lagssm/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lagssm/errors.hpp"

namespace lagssm {

namespace {

State3 axpy3(const State3& x, double h, const State3& k) {
  return {x[0] + h * k[0], x[1] + h * k[1], x[2] + h * k[2]};
}

}  // namespace

void validate(const LorenzParams& p) {
  for (double v : {p.sigma, p.rho, p.beta, p.x0[0], p.x0[1], p.x0[2]}) {
    if (!std::isfinite(v)) throw ArgumentError("Lorenz parameters must be finite");
  }
  if (!(p.dt > 0.0) || p.dt > kMaxLorenzStep) {
    throw ArgumentError("Lorenz dt must lie in (0, 0.02], got " + std::to_string(p.dt));
  }
  if (p.steps == 0) throw ArgumentError("Lorenz steps must be positive");
}

State3 lorenz_derivative(const LorenzParams& p, const State3& x) {
  return {p.sigma * (x[1] - x[0]), x[0] * (p.rho - x[2]) - x[1], x[0] * x[1] - p.beta * x[2]};
}

State3 rk4_step(const std::function<State3(const State3&)>& rhs, const State3& x, double dt) {
  const State3 k1 = rhs(x);
  const State3 k2 = rhs(axpy3(x, 0.5 * dt, k1));
  const State3 k3 = rhs(axpy3(x, 0.5 * dt, k2));
  const State3 k4 = rhs(axpy3(x, dt, k3));
  State3 out;
  for (int i = 0; i < 3; ++i) out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

std::vector<State3> lorenz63_trajectory(const LorenzParams& p) {
  validate(p);
  const auto rhs = [&p](const State3& x) { return lorenz_derivative(p, x); };
  State3 x = p.x0;
  const std::size_t total = p.burn_in + p.steps - 1;
  std::vector<State3> out;
  out.reserve(p.steps);
  for (std::size_t k = 0; k <= total; ++k) {
    if (k > 0) x = rk4_step(rhs, x, p.dt);
    if (!std::isfinite(x[0]) || !std::isfinite(x[1]) || !std::isfinite(x[2])) {
      throw NumericError("Lorenz integration diverged at step " + std::to_string(k));
    }
    if (k >= p.burn_in) out.push_back(x);
  }
  return out;
}

SignalTrace lorenz63(const LorenzParams& p) {
  const std::vector<State3> traj = lorenz63_trajectory(p);
  std::vector<double> xs(traj.size());
  std::transform(traj.begin(), traj.end(), xs.begin(), [](const State3& s) { return s[0]; });
  return make_trace(std::move(xs), p.dt);
}

SignalTrace sine_mixture(const std::vector<double>& freqs, const std::vector<double>& amps,
                         const std::vector<double>& phases, double delta, std::size_t steps) {
  if (freqs.size() != amps.size() || freqs.size() != phases.size()) {
    throw ArgumentError("sine_mixture: freqs, amps and phases differ in length");
  }
  std::vector<double> v(steps, 0.0);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * delta;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      v[k] += amps[i] * std::sin(2.0 * std::numbers::pi * freqs[i] * t + phases[i]);
    }
  }
  return make_trace(std::move(v), delta);
}

TimeFunction zoh_function(const SignalTrace& trace) {
  if (trace.empty()) throw ArgumentError("zoh_function: empty trace");
  return [times = trace.times, values = trace.values, delta = trace.delta](double s) {
    const std::size_t n = values.size();
    if (!(s >= times.front())) return 0.0;
    if (s >= times.front() + static_cast<double>(n) * delta) return 0.0;
    auto k = static_cast<std::size_t>(std::floor((s - times.front()) / delta));
    k = std::min(k, n - 1);
    // The division can land one interval off right at a boundary.
    if (k + 1 < n && s >= times[k + 1]) ++k;
    if (k > 0 && s < times[k]) --k;
    return values[k];
  };
}

SignalTrace normalize(const SignalTrace& trace) {
  SignalTrace out = trace;
  if (trace.empty()) return out;
  double mean = 0.0;
  for (double v : trace.values) mean += v;
  mean /= static_cast<double>(trace.size());
  double peak = 0.0;
  for (double& v : out.values) {
    v -= mean;
    peak = std::max(peak, std::abs(v));
  }
  if (peak == 0.0) return out;
  for (double& v : out.values) v /= peak;
  return out;
}

}  // namespace lagssm
