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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lagssm/errors.hpp"
#include "lagssm/recurrence.hpp"
#include "lagssm/signals.hpp"
#include "test_support.hpp"

using namespace lagssm;

namespace {

const WarpSpec kExp = make_exponential_warp(1.0);

DiscreteSystem lag_system(std::size_t n, double delta, InputModel model = InputModel::ZOH,
                          const WarpSpec& warp = kExp) {
  return make_lag_system(build_discrete(make_basis(n), warp, delta, model));
}

Vector unit(std::size_t n, std::size_t k) {
  Vector v(n, 0.0);
  v[k] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("trace construction and validation") {
  const SignalTrace tr = make_trace({1.0, 2.0, 3.0}, 0.5, 1.0);
  CHECK(tr.times == std::vector<double>{1.0, 1.5, 2.0});
  CHECK(tr.end_time() == 2.5);
  CHECK_NOTHROW(validate(tr));
  CHECK_THROWS_AS(make_trace({1.0}, 0.0), ArgumentError);

  SignalTrace bad = tr;
  bad.times[2] = 2.1;
  CHECK_THROWS_AS(validate(bad), ArgumentError);
  bad = tr;
  bad.times[1] = 1.0;
  CHECK_THROWS_AS(validate(bad), ArgumentError);
  bad = tr;
  bad.values[0] = NAN;
  CHECK_THROWS_AS(validate(bad), ArgumentError);
}

TEST_CASE("step basics") {
  const std::size_t n = 4;
  DiscreteSystem sys{Matrix::identity(n), {InputModel::ZOH, Vector(n, 0.0), {}}, 0.25};
  const MemoryState s0{{1, 2, 3, 4}, 0.5};
  const MemoryState s1 = step(s0, sys, 7.0);
  CHECK(s1.coeffs == s0.coeffs);
  CHECK(s1.t == 0.75);

  const double d = 0.01;
  const Vector bg = build_b_gen(make_basis(n), kExp);
  Vector bd = bg;
  for (double& v : bd) v *= d;
  auto rng = testing::make_rng(0x5eed0601);
  DiscreteSystem lin{testing::random_matrix(rng, n, n, -1, 1), {InputModel::ZOH, bd, {}}, d};
  const MemoryState out = step(zero_state(n), lin, 1.0);
  for (std::size_t i = 0; i < n; ++i) CHECK(out.coeffs[i] == doctest::Approx(d * bg[i]).epsilon(1e-15));
}

TEST_CASE("step argument checks") {
  const DiscreteSystem foh = lag_system(4, 0.01, InputModel::FOH);
  CHECK_THROWS_AS(step(zero_state(4), foh, 1.0), ArgumentError);
  CHECK_NOTHROW(step(zero_state(4), foh, 1.0, 0.5));
  const DiscreteSystem zoh = lag_system(4, 0.01);
  CHECK_THROWS_AS(step(zero_state(4), zoh, 1.0, 0.5), ArgumentError);
  CHECK_THROWS_AS(step(zero_state(3), zoh, 1.0), ArgumentError);
}

TEST_CASE("one ZOH step equals the direct projection of the one-interval history") {
  const double d = 0.01;
  const BasisSpec b = make_basis(4);
  const MemoryState s = step(zero_state(4), lag_system(4, d), 1.0);
  const auto history = [d](double x) { return (x >= 0.0 && x < d) ? 1.0 : 0.0; };
  const std::vector<double> cuts{0.0};
  const MemoryState ref = project_direct(history, b, kExp, d, cuts);
  CHECK(testing::max_abs_diff(s.coeffs, ref.coeffs) <= 1e-6);
  CHECK(s.t == d);
}

TEST_CASE("FOH step weights the previous and next samples") {
  const std::size_t n = 6;
  const DiscreteSystem foh = lag_system(n, 0.02, InputModel::FOH);
  const MemoryState s = step(zero_state(n), foh, 2.0, -1.0);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(s.coeffs[i] == doctest::Approx(2.0 * foh.input.v_next[i] - foh.input.v_prev[i]).epsilon(1e-14));
  }
}

TEST_CASE("run on a zero trace stays at zero") {
  const SignalTrace tr = make_trace(std::vector<double>(50, 0.0), 0.01);
  for (const auto& s : run(tr, lag_system(8, 0.01))) {
    for (double c : s.coeffs) CHECK(c == 0.0);
  }
  CHECK_THROWS_AS(run(make_trace({}, 0.01), lag_system(8, 0.01)), ArgumentError);
}

TEST_CASE("run stamps times as step count times delta") {
  const double d = 0.01;
  const SignalTrace tr = make_trace(std::vector<double>(1000, 1.0), d);
  const auto states = run(tr, lag_system(4, d));
  for (std::size_t k = 0; k < states.size(); ++k) CHECK(states[k].t == static_cast<double>(k + 1) * d);
  CHECK(run_final(tr, lag_system(4, d)).t == 1000 * d);
  CHECK(run_final(tr, lag_system(4, d)).coeffs == states.back().coeffs);
}

TEST_CASE("constant input converges to the fixed point") {
  const double d = 0.01;
  const std::size_t n = 16;
  const DiscreteSystem sys = lag_system(n, d);
  const auto states = run(make_trace(std::vector<double>(6000, 1.0), d), sys);
  for (std::size_t k = 4000; k < states.size(); ++k) {
    Vector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = states[k].coeffs[i] - states[k - 1].coeffs[i];
    CHECK(norm2(diff) < 1e-8);
  }
  // c* = (I - A)^{-1} b, and a constant history projects onto phi_0 alone.
  const Vector fixed = LuDecomposition(Matrix::identity(n) - sys.transition).solve(sys.input.v_next);
  CHECK(testing::max_abs_diff(states.back().coeffs, fixed) <= 1e-9);
  CHECK(testing::max_abs_diff(fixed, unit(n, 0)) <= 1e-9);
}

TEST_CASE("run is linear") {
  auto rng = testing::make_rng(0x5eed0602);
  const double d = 0.01;
  for (InputModel model : {InputModel::ZOH, InputModel::FOH, InputModel::Dirac}) {
    const DiscreteSystem sys = lag_system(12, d, model);
    const std::vector<double> u1 = testing::uniform_vector(rng, 300, -1, 1);
    const std::vector<double> u2 = testing::uniform_vector(rng, 300, -1, 1);
    const double a = testing::uniform(rng, -2, 2), b = testing::uniform(rng, -2, 2);
    std::vector<double> mix(300);
    for (std::size_t k = 0; k < 300; ++k) mix[k] = a * u1[k] + b * u2[k];
    const auto r1 = run(make_trace(u1, d), sys);
    const auto r2 = run(make_trace(u2, d), sys);
    const auto rm = run(make_trace(mix, d), sys);
    double worst = 0.0;
    for (std::size_t k = 0; k < 300; ++k) {
      for (std::size_t i = 0; i < 12; ++i) {
        worst = std::max(worst, std::abs(rm[k].coeffs[i] - (a * r1[k].coeffs[i] + b * r2[k].coeffs[i])));
      }
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("free response decays like e^{-t}") {
  // The corrected transition is non-normal, so the norm is not monotone step
  // to step; the slowest mode is n = 0 with rate 1.
  auto rng = testing::make_rng(0x5eed0603);
  const double d = 0.01;
  const std::size_t n = 16;
  const DiscreteSystem sys = lag_system(n, d);
  MemoryState s{testing::uniform_vector(rng, n, -1, 1), 0.0};
  s.coeffs[0] = 1.0;
  std::vector<double> ts, logs;
  for (std::size_t k = 1; k <= 2000; ++k) {
    s = step(s, sys, 0.0);
    if (k >= 200) {
      ts.push_back(static_cast<double>(k) * d);
      logs.push_back(std::log(norm2(s.coeffs)));
    }
  }
  double mt = 0, ml = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mt += ts[i];
    ml += logs[i];
  }
  mt /= ts.size();
  ml /= ts.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    num += (ts[i] - mt) * (logs[i] - ml);
    den += (ts[i] - mt) * (ts[i] - mt);
  }
  const double slope = num / den;
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.05));
}

TEST_CASE("reconstruct") {
  const BasisSpec b = make_basis(5);
  const std::vector<double> grid{-3.0, -1.0, 0.0, 1.5, 2.0};
  const MemoryState e0{unit(5, 0), 2.0};
  for (double v : reconstruct(e0, b, kExp, grid)) CHECK(v == 1.0);
  const MemoryState e1{unit(5, 1), 2.0};
  const std::vector<double> at_t{2.0};
  CHECK(reconstruct(e1, b, kExp, at_t)[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  const std::vector<double> future{2.5};
  CHECK_THROWS_AS(reconstruct(e0, b, kExp, future), DomainError);
  CHECK_THROWS_AS(reconstruct(MemoryState{unit(4, 0), 2.0}, b, kExp, grid), ArgumentError);
}

TEST_CASE("project_direct") {
  const BasisSpec b = make_basis(8);
  const double t = 1.7;
  const MemoryState zero = project_direct([](double) { return 0.0; }, b, kExp, t);
  for (double c : zero.coeffs) CHECK(c == 0.0);
  CHECK(zero.t == t);

  const MemoryState one = project_direct([](double) { return 1.0; }, b, kExp, t);
  CHECK(testing::max_abs_diff(one.coeffs, unit(8, 0)) <= 1e-10);

  const auto psi1 = [&](double s) { return eval_phi(b, 1, warp_forward(kExp, t, s)); };
  CHECK(testing::max_abs_diff(project_direct(psi1, b, kExp, t).coeffs, unit(8, 1)) <= 1e-10);

  CHECK_THROWS_AS(project_direct([](double) { return NAN; }, b, kExp, t), EvaluationError);
}

TEST_CASE("projection and reconstruction round trip") {
  auto rng = testing::make_rng(0x5eed0604);
  const std::size_t n = 24;
  const BasisSpec b = make_basis(n);
  for (int trial = 0; trial < 10; ++trial) {
    const double t = testing::uniform(rng, 0.0, 10.0);
    const WarpSpec w = make_exponential_warp(testing::uniform(rng, 0.5, 2.0));
    const Vector coef = testing::uniform_vector(rng, n, -1, 1);
    const auto u = [&](double s) {
      const Vector phi = eval_phi_all(b, warp_forward(w, t, s));
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) v += coef[i] * phi[i];
      return v;
    };
    const MemoryState st = project_direct(u, b, w, t);
    CHECK(testing::max_abs_diff(st.coeffs, coef) <= 1e-10);
    std::vector<double> grid(200);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = t - 8.0 * static_cast<double>(i) / 199.0;
    const std::vector<double> rec = reconstruct(st, b, w, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(rec[i] - u(grid[i])) <= 1e-8);
  }
}

TEST_CASE("phi_2 history reconstructs exactly") {
  const BasisSpec b = make_basis(6);
  const double t = 3.0;
  const auto u = [&](double s) { return eval_phi(b, 2, std::exp(s - t)); };
  const MemoryState st = project_direct(u, b, kExp, t);
  std::vector<double> grid(200);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = t - 6.0 * static_cast<double>(i) / 199.0;
  const auto rec = reconstruct(st, b, kExp, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(rec[i] - u(grid[i])) <= 1e-8);
}

TEST_CASE("recurrence agrees with the direct projection of a ZOH sine") {
  // Engineering tolerance: 2-norm 1e-3. The ZOH transition and input vector
  // are exact for piecewise-constant input, so the observed gap is far smaller.
  const double d = 0.01;
  const std::size_t n = 32;
  const BasisSpec b = make_basis(n);
  const SignalTrace tr = sine_mixture({1.0}, {1.0}, {0.0}, d, 500);
  const MemoryState fin = run_final(tr, lag_system(n, d));
  const MemoryState ref = project_direct(zoh_function(tr), b, kExp, fin.t, tr.times,
                                         QuadratureConfig{24, 1});
  Vector diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = fin.coeffs[i] - ref.coeffs[i];
  MESSAGE("recurrence vs direct projection, 2-norm gap: " << norm2(diff));
  CHECK(norm2(diff) <= 1e-3);
  CHECK(norm2(diff) <= 1e-9);
}

TEST_CASE("block-diagonal composition steps each block independently") {
  const double d = 0.01;
  const DiscreteSystem s1 = lag_system(8, d, InputModel::ZOH, make_exponential_warp(1.0));
  const DiscreteSystem s4 = lag_system(8, d, InputModel::ZOH, make_exponential_warp(4.0));
  const std::vector<StateSpaceBlock> blocks{{s1.transition, s1.input.v_next},
                                            {s4.transition, s4.input.v_next}};
  const StateSpaceBlock comp = compose_block_diagonal(blocks);
  const DiscreteSystem sc{comp.a, {InputModel::ZOH, comp.b, {}}, d};
  const SignalTrace tr = sine_mixture({0.7, 2.3}, {1.0, 0.4}, {0.1, 1.0}, d, 400);
  const auto r1 = run(tr, s1);
  const auto r4 = run(tr, s4);
  const auto rc = run(tr, sc);
  bool identical = true;
  for (std::size_t k = 0; k < tr.size(); ++k) {
    for (std::size_t i = 0; i < 8; ++i) {
      identical = identical && rc[k].coeffs[i] == r1[k].coeffs[i];
      identical = identical && rc[k].coeffs[8 + i] == r4[k].coeffs[i];
    }
  }
  CHECK(identical);
}

TEST_CASE("bilinear HiPPO system") {
  const DiscreteSystem h = make_hippo_bilinear_system(6, 0.01);
  CHECK(h.transition.rows() == 6);
  CHECK(h.input.v_next.size() == 6);
  CHECK_FALSE(h.input.is_pair());
  // Lower triangular like the continuous matrix.
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = r + 1; c < 6; ++c) CHECK(h.transition(r, c) == 0.0);
  }
}
