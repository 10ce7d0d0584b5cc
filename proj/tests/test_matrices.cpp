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
#include <limits>

#include "lagssm/errors.hpp"
#include "lagssm/matrices.hpp"
#include "test_support.hpp"

using namespace lagssm;

namespace {

const WarpSpec kExp = make_exponential_warp(1.0);

// Analytic (A^0)^T: sqrt((2n+1)(2m+1)) above the diagonal, n on it.
Matrix analytic_a_gen(std::size_t n) {
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = static_cast<double>(r);
    for (std::size_t c = r + 1; c < n; ++c) a(r, c) = std::sqrt((2.0 * r + 1) * (2.0 * c + 1));
  }
  return a;
}

// Truncated Taylor series sum_{k<40} M^k / k! in extended precision.
Matrix taylor_exp(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<long double> term(n * n, 0), sum(n * n, 0), next(n * n);
  for (std::size_t i = 0; i < n; ++i) term[i * n + i] = sum[i * n + i] = 1;
  for (int k = 1; k < 40; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        long double acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += term[r * n + j] * m(j, c);
        next[r * n + c] = acc / k;
      }
    }
    term.swap(next);
    for (std::size_t i = 0; i < n * n; ++i) sum[i] += term[i];
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = static_cast<double>(sum[i]);
  return out;
}

double max_abs(const Matrix& m) {
  double w = 0.0;
  for (double v : m.data()) w = std::max(w, std::abs(v));
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// generators

TEST_CASE("a_gen for N = 3") {
  const Matrix a = build_a_gen(make_basis(3), kExp);
  const Matrix ref{{0, std::sqrt(3.0), std::sqrt(5.0)}, {0, 1, std::sqrt(15.0)}, {0, 0, 2}};
  CHECK(max_abs(a - ref) <= 1e-12);
}

TEST_CASE("a_gen column 0 vanishes") {
  const Matrix a = build_a_gen(make_basis(16), kExp);
  for (std::size_t n = 0; n < 16; ++n) CHECK(a(n, 0) == 0.0);
}

TEST_CASE("a_gen matches the analytic generator at N = 64") {
  const Matrix a = build_a_gen(make_basis(64), kExp);
  CHECK(frobenius_rel_diff(analytic_a_gen(64), a) <= 1e-10);
  double lower = 0.0, diag = 0.0;
  for (std::size_t n = 0; n < 64; ++n) {
    diag = std::max(diag, std::abs(a(n, n) - static_cast<double>(n)));
    for (std::size_t m = 0; m < n; ++m) lower = std::max(lower, std::abs(a(n, m)));
  }
  CHECK(lower <= 1e-10);
  CHECK(diag <= 1e-10);
}

TEST_CASE("a_gen scales as 1/tau") {
  const BasisSpec b = make_basis(12);
  const Matrix a1 = build_a_gen(b, kExp);
  const Matrix a4 = build_a_gen(b, make_exponential_warp(4.0));
  CHECK(frobenius_rel_diff(0.25 * a1, a4) <= 1e-13);
}

TEST_CASE("b_gen") {
  const Vector b3 = build_b_gen(make_basis(3), kExp);
  CHECK(b3 == Vector{1.0, std::sqrt(3.0), std::sqrt(5.0)});
  const Vector half = build_b_gen(make_basis(3), make_exponential_warp(2.0));
  for (std::size_t n = 0; n < 3; ++n) CHECK(half[n] == doctest::Approx(0.5 * b3[n]).epsilon(1e-15));
  CHECK(build_b_gen(make_basis(1), make_exponential_warp(3.0)) ==
        Vector{make_exponential_warp(3.0).f_prime(0.0)});
}

TEST_CASE("build_generators bundles both") {
  const GeneratorMatrices g = build_generators(make_basis(5), kExp);
  CHECK(g.a_gen == build_a_gen(make_basis(5), kExp));
  CHECK(g.b_gen == build_b_gen(make_basis(5), kExp));
  CHECK(g.basis.n_basis == 5);
}

TEST_CASE("hippo reference") {
  const HippoReference r2 = hippo_legs_reference(2);
  CHECK(r2.a_hippo == Matrix{{-1, 0}, {-std::sqrt(3.0), -2}});
  CHECK(r2.b_hippo == Vector{1, std::sqrt(3.0)});
  const HippoReference r1 = hippo_legs_reference(1);
  CHECK(r1.a_hippo == Matrix{{-1}});
  CHECK(r1.b_hippo == Vector{1});
  CHECK_THROWS_AS(hippo_legs_reference(0), ArgumentError);
}

TEST_CASE("hippo reference equals -(a_gen + I)^T") {
  for (std::size_t n : {10u, 30u, 50u}) {
    const Matrix a_gen = build_a_gen(make_basis(n), kExp);
    const Matrix cand = (-1.0 * (a_gen + Matrix::identity(n))).transpose();
    CHECK(frobenius_rel_diff(hippo_legs_reference(n).a_hippo, cand) <= 1e-10);
  }
}

TEST_CASE("the two written forms of the tilted generator coincide") {
  const Matrix a_gen = build_a_gen(make_basis(20), kExp);
  const Matrix i = Matrix::identity(20);
  CHECK((-1.0 * (a_gen + i)).transpose() == -1.0 * (a_gen.transpose() + i));
}

// ---------------------------------------------------------------------------
// a_delta

TEST_CASE("a_delta near zero step is the identity") {
  const BasisSpec b = make_basis(8);
  CHECK(frobenius_norm(build_a_delta(b, kExp, 1e-8) - Matrix::identity(8)) <= 1e-6);
  CHECK(frobenius_norm(build_a_delta(make_basis(32), kExp, 0.0) - Matrix::identity(32)) <= 1e-12);
}

TEST_CASE("a_delta - I is delta a_gen to first order") {
  // ||a_gen||_F grows like N^2, so the gap at a fixed small step does too.
  const BasisSpec b = make_basis(32);
  const double d = 1e-8;
  const Matrix gap = build_a_delta(b, kExp, d) - Matrix::identity(32);
  CHECK(frobenius_rel_diff(d * build_a_gen(b, kExp), gap) <= 1e-4);
}

TEST_CASE("a_delta matches exp(delta a_gen)") {
  const BasisSpec b = make_basis(64);
  const Matrix a_gen = build_a_gen(b, kExp);
  CHECK(frobenius_rel_diff(build_a_delta(b, kExp, 1e-2), matrix_exp(1e-2 * a_gen)) <= 1e-7);
  CHECK(frobenius_rel_diff(build_a_delta(b, kExp, 1e-1), matrix_exp(1e-1 * a_gen)) <= 1e-3);
}

TEST_CASE("a_delta entry (0, 0) is one") {
  auto rng = testing::make_rng(0x5eed0501);
  const BasisSpec b = make_basis(4);
  for (int trial = 0; trial < 20; ++trial) {
    const double d = testing::uniform(rng, 0.0, 0.5);
    CHECK(std::abs(build_a_delta(b, kExp, d)(0, 0) - 1.0) <= 1e-12);
  }
}

TEST_CASE("a_delta argument checks") {
  const BasisSpec b = make_basis(4);
  CHECK_THROWS_AS(build_a_delta(b, kExp, 0.6), ArgumentError);
  CHECK_THROWS_AS(build_a_delta(b, kExp, -1e-3), ArgumentError);
  CHECK_THROWS_AS(build_a_delta(b, kExp, NAN), ArgumentError);
  TransitionOptions opts;
  opts.allow_large_delta = true;
  CHECK_NOTHROW(build_a_delta(b, kExp, 0.6, {}, opts));
}

TEST_CASE("a_delta is upper triangular with diagonal e^{n delta}") {
  // phi_m(e^delta z) is a degree-m polynomial in z, so its projections onto
  // higher-degree phi_n vanish, and its leading coefficient scales by e^{m delta}.
  const BasisSpec b = make_basis(64);
  for (double d : {1e-3, 1e-2}) {
    const Matrix a = build_a_delta(b, kExp, d);
    double lower = 0.0, diag = 0.0;
    for (std::size_t n = 0; n < 64; ++n) {
      const double e = std::exp(static_cast<double>(n) * d);
      diag = std::max(diag, std::abs(a(n, n) - e) / e);
      for (std::size_t m = 0; m < n; ++m) lower = std::max(lower, std::abs(a(n, m)));
    }
    CAPTURE(d);
    CHECK(lower <= 1e-9);
    CHECK(diag <= 1e-9);
  }
}

TEST_CASE("a_delta semigroup") {
  // Steps summing past ~0.06 push phi_63(e^delta z) far outside [0, 1] and
  // the rounding in a_delta itself exceeds 1e-9.
  const BasisSpec b = make_basis(64);
  for (double d1 : {0.01, 0.03}) {
    for (double d2 : {0.01, 0.03}) {
      const Matrix lhs = build_a_delta(b, kExp, d1) * build_a_delta(b, kExp, d2);
      CAPTURE(d1);
      CAPTURE(d2);
      CHECK(frobenius_rel_diff(build_a_delta(b, kExp, d1 + d2), lhs) <= 1e-9);
    }
  }
}

// ---------------------------------------------------------------------------
// corrected transition and shifts

TEST_CASE("correct_a_delta near zero step") {
  const BasisSpec b = make_basis(8);
  const Matrix c = correct_a_delta(build_a_delta(b, kExp, 1e-8), 1e-8);
  CHECK(frobenius_norm(c - Matrix::identity(8)) <= 1e-6);
}

TEST_CASE("corrected diagonal is e^{-(n+1) delta} and stable") {
  const BasisSpec b = make_basis(64);
  for (double d : {1e-3, 1e-2}) {
    const Matrix c = correct_a_delta(build_a_delta(b, kExp, d), d);
    double worst = 0.0, radius = 0.0;
    for (std::size_t n = 0; n < 64; ++n) {
      const double e = std::exp(-static_cast<double>(n + 1) * d);
      worst = std::max(worst, std::abs(c(n, n) - e) / e);
      radius = std::max(radius, std::abs(c(n, n)));
    }
    CAPTURE(d);
    CHECK(worst <= 1e-9);
    CHECK(radius < 1.0);
    CHECK(radius == doctest::Approx(std::exp(-d)).epsilon(1e-9));
  }
}

TEST_CASE("corrected transition matches exp(delta (-(a_gen + I)))") {
  const BasisSpec b = make_basis(64);
  const Matrix a_gen = build_a_gen(b, kExp);
  const Matrix stable = -1.0 * (a_gen + Matrix::identity(64));
  const Matrix c = correct_a_delta(build_a_delta(b, kExp, 1e-2), 1e-2);
  CHECK(frobenius_rel_diff(matrix_exp(1e-2 * stable), c) <= 1e-7);
}

TEST_CASE("correct_a_delta guards") {
  CHECK_THROWS_AS(correct_a_delta(Matrix{{1, 2}, {2, 4}}, 0.1), NumericError);
  CHECK_THROWS_AS(correct_a_delta(Matrix(2, 3), 0.1), ArgumentError);
  // N = 64 at delta = 0.1 has a 1-norm condition number far above 1e12.
  const Matrix a = build_a_delta(make_basis(64), kExp, 0.1);
  CHECK(condition_number(a) > kDefaultMaxCondition);
  CHECK_THROWS_AS(correct_a_delta(a, 0.1), NumericError);
  CHECK_NOTHROW(correct_a_delta(a, 0.1, CorrectionOptions{std::numeric_limits<double>::infinity()}));
  const std::vector<double> d{1.0, 1e-6};
  CHECK_THROWS_AS(correct_a_delta(Matrix::diagonal(d), 0.0, CorrectionOptions{1e5}), NumericError);
}

TEST_CASE("backward shift") {
  CHECK(backward_shift(Matrix::identity(3), 0.0) == Matrix::identity(3));
  const BasisSpec b = make_basis(64);
  const double d = 0.01;
  const Matrix a = build_a_delta(b, kExp, d);
  const Matrix prod = backward_shift(a, d) * correct_a_delta(a, d);
  CHECK(max_abs(prod - Matrix::identity(64)) <= 1e-9);
}

TEST_CASE("recurrence_transition is the transpose") {
  const Matrix m{{1, 2}, {0, 3}};
  CHECK(recurrence_transition(m) == Matrix{{1, 0}, {2, 3}});
}

// ---------------------------------------------------------------------------
// input vectors

TEST_CASE("input model names") {
  CHECK(parse_input_model("ZOH") == InputModel::ZOH);
  CHECK(parse_input_model("foh") == InputModel::FOH);
  CHECK(parse_input_model("Dirac") == InputModel::Dirac);
  CHECK_THROWS_AS(parse_input_model("soh"), ArgumentError);
  for (InputModel m : {InputModel::Dirac, InputModel::ZOH, InputModel::FOH}) {
    CHECK(parse_input_model(to_string(m)) == m);
  }
}

TEST_CASE("Dirac input vector") {
  const BasisSpec b = make_basis(3);
  const InputVectors v = build_b_delta(b, kExp, 0.01, InputModel::Dirac);
  CHECK(v.v_next == Vector{1.0, std::sqrt(3.0), std::sqrt(5.0)});
  CHECK(v.v_prev.empty());
  CHECK_FALSE(v.is_pair());
  for (double d : {0.0, 1e-6, 0.3, 2.0}) {
    CHECK(build_b_delta(b, kExp, d, InputModel::Dirac).v_next == v.v_next);
  }
}

TEST_CASE("ZOH input vector, n = 0") {
  const BasisSpec b = make_basis(1);
  for (double d : {1e-4, 1e-2, 0.1, 0.5}) {
    const double got = build_b_delta(b, kExp, d, InputModel::ZOH).v_next[0];
    CHECK(got == doctest::Approx(-std::expm1(-d)).epsilon(1e-13));
  }
}

TEST_CASE("ZOH input vector matches the direct integral") {
  const BasisSpec b = make_basis(16);
  const double d = 0.05;
  const InputVectors v = build_b_delta(b, kExp, d, InputModel::ZOH);
  for (std::size_t n = 0; n < 16; ++n) {
    const double ref = integrate([&](double z) { return eval_phi(b, n, z); }, std::exp(-d), 1.0);
    CHECK(v.v_next[n] == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("ZOH first-order expansion in delta") {
  // integral over [e^{-d}, 1] of phi_n = phi_n(1) d (1 - d (1 + n(n+1)) / 2) + O(d^3 n^4)
  const BasisSpec b = make_basis(32);
  const Vector bg = build_b_gen(b, kExp);
  for (double d : {1e-6, 1e-7}) {
    const InputVectors v = build_b_delta(b, kExp, d, InputModel::ZOH);
    // Rounding e^{-d} to double shifts the interval width by up to 1.2e-16.
    const double width_slack = 4e-16 / d;
    for (std::size_t n = 0; n < 32; ++n) {
      const double nn = static_cast<double>(n);
      const double predicted = d * (1.0 + nn * (nn + 1.0)) / 2.0;
      const double rel = (bg[n] - v.v_next[n] / d) / bg[n];
      CAPTURE(n);
      CHECK(std::abs(rel - predicted) <= 1e-2 * predicted + width_slack);
    }
  }
}

TEST_CASE("ZOH limit agreement for low-order components") {
  // The first-order error d (1 + n(n+1)) / 2 stays below 1e-4 at d = 1e-6 for n < 14.
  const BasisSpec b = make_basis(14);
  const Vector bg = build_b_gen(b, kExp);
  const double d = 1e-6;
  const InputVectors v = build_b_delta(b, kExp, d, InputModel::ZOH);
  for (std::size_t n = 0; n < 14; ++n) {
    CHECK(std::abs(v.v_next[n] / d - bg[n]) / bg[n] <= 1e-4);
  }
}

TEST_CASE("FOH pair") {
  const BasisSpec b = make_basis(24);
  for (double d : {1e-3, 1e-2, 0.2}) {
    const InputVectors foh = build_b_delta(b, kExp, d, InputModel::FOH);
    const InputVectors zoh = build_b_delta(b, kExp, d, InputModel::ZOH);
    REQUIRE(foh.is_pair());
    REQUIRE(foh.v_prev.size() == 24);
    // A constant input sees the hold as constant: the two weights add up to ZOH.
    for (std::size_t n = 0; n < 24; ++n) {
      CHECK(foh.v_next[n] + foh.v_prev[n] ==
            doctest::Approx(zoh.v_next[n]).epsilon(1e-12).scale(1e-12));
    }
    // n = 0: I_g = -1 + e^{-d} (1 + d) in closed form, rearranged to limit cancellation.
    const double ig0 = std::expm1(-d) * (1.0 + d) + d;
    CHECK(foh.v_prev[0] == doctest::Approx(-ig0 / d).epsilon(1e-9));
  }
  CHECK_THROWS_AS(build_b_delta(b, kExp, 0.0, InputModel::FOH), ArgumentError);
}

TEST_CASE("FOH small-step asymptotics") {
  // I_g = -phi_n(1) d^2 / 2 + O(d^3), so each FOH weight carries half of B_gen.
  const BasisSpec b = make_basis(32);
  const Vector bg = build_b_gen(b, kExp);
  const double d = 1e-8;
  const InputVectors foh = build_b_delta(b, kExp, d, InputModel::FOH);
  Vector next(32), prev(32), total(32), half(32);
  for (std::size_t n = 0; n < 32; ++n) {
    next[n] = foh.v_next[n] / d;
    prev[n] = foh.v_prev[n] / d;
    total[n] = next[n] + prev[n];
    half[n] = 0.5 * bg[n];
  }
  CHECK(relative_diff(half, next) <= 1e-4);
  CHECK(relative_diff(half, prev) <= 1e-4);
  CHECK(relative_diff(bg, total) <= 1e-4);
}

// ---------------------------------------------------------------------------
// tools

TEST_CASE("matrix_exp trivial cases") {
  CHECK(matrix_exp(Matrix(4, 4)) == Matrix::identity(4));
  for (auto [a, b] : {std::pair{1.0, -2.0}, std::pair{-3.0, 2.0}, std::pair{0.3, 7.5}}) {
    const std::vector<double> d{a, b};
    const Matrix e = matrix_exp(Matrix::diagonal(d));
    CHECK(std::abs(e(0, 0) - std::exp(a)) <= 1e-13 * std::exp(a));
    CHECK(std::abs(e(1, 1) - std::exp(b)) <= 1e-13 * std::exp(b));
    CHECK(e(0, 1) == 0.0);
    CHECK(e(1, 0) == 0.0);
  }
  CHECK_THROWS_AS(matrix_exp(Matrix{{NAN}}), ArgumentError);
  CHECK_THROWS_AS(matrix_exp(Matrix(2, 3)), ArgumentError);
}

TEST_CASE("matrix_exp of a nilpotent block") {
  const Matrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  const Matrix ref{{1, 1, 0.5}, {0, 1, 1}, {0, 0, 1}};
  CHECK(max_abs(matrix_exp(n) - ref) <= 1e-15);
}

TEST_CASE("matrix_exp vs Taylor oracle") {
  auto rng = testing::make_rng(0x5eed0502);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = testing::random_matrix_with_norm1(rng, 8, testing::uniform(rng, 0.05, 1.0));
    worst = std::max(worst, max_abs(matrix_exp(m) - taylor_exp(m)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("matrix_exp(A) matrix_exp(-A) = I") {
  auto rng = testing::make_rng(0x5eed0503);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = testing::random_matrix_with_norm1(rng, 12, 3.0);
    CHECK(max_abs(matrix_exp(m) * matrix_exp(-1.0 * m) - Matrix::identity(12)) <= 1e-12);
  }
}

TEST_CASE("bilinear_discretize") {
  const Vector b{1.0, 2.0};
  const DiscreteLti z = bilinear_discretize(Matrix(2, 2), b, 0.1);
  CHECK(z.a == Matrix::identity(2));
  CHECK(z.b[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(z.b[1] == doctest::Approx(0.2).epsilon(1e-15));
  const DiscreteLti s = bilinear_discretize(Matrix{{-1}}, Vector{1}, 0.01);
  CHECK(s.a(0, 0) == doctest::Approx(0.995 / 1.005).epsilon(1e-15));
  CHECK(s.a(0, 0) == doctest::Approx(0.9900498).epsilon(1e-7));
  CHECK(s.b[0] == doctest::Approx(0.01 / 1.005).epsilon(1e-15));
  CHECK_THROWS_AS(bilinear_discretize(Matrix{{2}}, Vector{1}, 1.0), NumericError);
  CHECK_THROWS_AS(bilinear_discretize(Matrix(2, 2), Vector{1}, 1.0), ArgumentError);
}

TEST_CASE("bilinear HiPPO vs corrected transition at delta = 1e-4") {
  const std::size_t n = 64;
  const HippoReference ref = hippo_legs_reference(n);
  const Matrix bil = bilinear_discretize(ref.a_hippo, ref.b_hippo, 1e-4).a;
  const Matrix c = correct_a_delta(build_a_delta(make_basis(n), kExp, 1e-4), 1e-4);
  CHECK(frobenius_rel_diff(bil, recurrence_transition(c)) <= 2e-4);
}

TEST_CASE("frobenius_rel_diff") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(frobenius_rel_diff(m, m) == 0.0);
  CHECK(frobenius_rel_diff(Matrix::identity(2), Matrix(2, 2)) == 1.0);
  CHECK(frobenius_rel_diff(Matrix{{2}}, Matrix{{1}}) == 0.5);
  CHECK_THROWS_AS(frobenius_rel_diff(Matrix(2, 2), Matrix::identity(2)), ArgumentError);
  CHECK_THROWS_AS(frobenius_rel_diff(m, Matrix(2, 3)), ArgumentError);
  CHECK(relative_diff(Vector{3, 4}, Vector{3, 4}) == 0.0);
  CHECK_THROWS_AS(relative_diff(Vector{0}, Vector{1}), ArgumentError);
}

TEST_CASE("compose_block_diagonal") {
  const StateSpaceBlock one{Matrix{{1, 2}, {3, 4}}, Vector{5, 6}};
  const StateSpaceBlock single = compose_block_diagonal(std::vector{one});
  CHECK(single.a == one.a);
  CHECK(single.b == one.b);
  const StateSpaceBlock two = compose_block_diagonal(
      std::vector{StateSpaceBlock{Matrix{{7}}, Vector{1}}, StateSpaceBlock{Matrix{{9}}, Vector{2}}});
  CHECK(two.a == Matrix{{7, 0}, {0, 9}});
  CHECK(two.b == Vector{1, 2});
  CHECK_THROWS_AS(compose_block_diagonal(std::vector<StateSpaceBlock>{}), ArgumentError);
  CHECK_THROWS_AS(compose_block_diagonal(std::vector{StateSpaceBlock{Matrix{{1}}, Vector{1, 2}}}),
                  ArgumentError);
  CHECK_THROWS_AS(compose_block_diagonal(std::vector{StateSpaceBlock{Matrix(1, 2), Vector{1}}}),
                  ArgumentError);
}

TEST_CASE("build_discrete") {
  const BasisSpec b = make_basis(8);
  const DiscreteMatrices m = build_discrete(b, kExp, 0.01, InputModel::FOH);
  CHECK(m.delta == 0.01);
  CHECK(m.a_delta == build_a_delta(b, kExp, 0.01));
  CHECK(m.a_corrected == correct_a_delta(m.a_delta, 0.01));
  CHECK(m.b_delta == build_b_delta(b, kExp, 0.01, InputModel::FOH));
}
