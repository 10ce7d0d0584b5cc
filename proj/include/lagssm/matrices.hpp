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

// State-space matrices built from a basis and a stationary warp through
// lag-operator inner products, plus the closed-form HiPPO-LegS reference and
// the discretization and comparison tools.
//
// Index convention. Every inner-product matrix is indexed (n, m) as
//
//   a_gen(n, m)   = <phi_n, phi_m' / g'>
//   a_delta(n, m) = <phi_n, phi_m o lag_delta>
//
// For the exponential warp these are upper triangular, and so are
// a_corrected = a_delta^{-1} e^{-delta} and the shift operators built from them.
// The coefficient recurrence c_{t+delta} = T c_t + ... consumes the transpose,
// T = a_corrected^T, which is lower triangular and matches the orientation of
// the HiPPO-LegS matrix. recurrence_transition() performs that step.

#ifndef LAGSSM_MATRICES_HPP
#define LAGSSM_MATRICES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lagssm/basis.hpp"
#include "lagssm/linalg.hpp"
#include "lagssm/quadrature.hpp"
#include "lagssm/warp.hpp"

namespace lagssm {

// ---------------------------------------------------------------------------
// Continuous generators

struct GeneratorMatrices {
  Matrix a_gen;
  Vector b_gen;
  BasisSpec basis;
  WarpSpec warp;
};

/// a_gen(n, m) = integral over (0,1] of phi_n(z) phi_m'(z) / g'(z) dz.
Matrix build_a_gen(const BasisSpec& basis, const WarpSpec& warp, const QuadratureConfig& quad = {});

/// b_gen(n) = phi_n(1) f'(0).
Vector build_b_gen(const BasisSpec& basis, const WarpSpec& warp);

GeneratorMatrices build_generators(const BasisSpec& basis, const WarpSpec& warp,
                                   const QuadratureConfig& quad = {});

/// Closed-form HiPPO-LegS: a_hippo = -(A0 + I) with
/// A0(n, m) = sqrt((2n+1)(2m+1)) for m < n, n on the diagonal, 0 above;
/// b_hippo(n) = sqrt(2n+1).
struct HippoReference {
  Matrix a_hippo;
  Vector b_hippo;
};

HippoReference hippo_legs_reference(std::size_t n_basis);

// ---------------------------------------------------------------------------
// Discrete transitions

inline constexpr double kDefaultMaxDelta = 0.5;
inline constexpr double kDefaultMaxCondition = 1e12;

struct TransitionOptions {
  double max_delta = kDefaultMaxDelta;
  /// Lifts the max_delta cap. Large delta * N makes phi_m(e^delta z) huge and
  /// the quadrature ill-conditioned.
  bool allow_large_delta = false;
};

/// a_delta(n, m) = integral over (0,1] of phi_n(z) phi_m(lag(delta, z)) dz.
Matrix build_a_delta(const BasisSpec& basis, const WarpSpec& warp, double delta,
                     const QuadratureConfig& quad = {}, const TransitionOptions& opts = {});

struct CorrectionOptions {
  double max_condition = kDefaultMaxCondition;
};

/// a_delta^{-1} e^{-delta} via LU with partial pivoting. Throws NumericError if
/// a_delta is singular or its 1-norm condition number exceeds max_condition.
Matrix correct_a_delta(const Matrix& a_delta, double delta, const CorrectionOptions& opts = {});

/// Same with the measure tilt of a warp of rate tau: a_delta^{-1} e^{-delta/tau}.
/// Equal to the overload above for tau = 1.
Matrix correct_a_delta(const Matrix& a_delta, double delta, const WarpSpec& warp,
                       const CorrectionOptions& opts = {});

/// a_delta e^{delta}.
Matrix backward_shift(const Matrix& a_delta, double delta);

/// a_delta e^{delta/tau}.
Matrix backward_shift(const Matrix& a_delta, double delta, const WarpSpec& warp);

/// Transpose of an inner-product-oriented transition; see the file comment.
Matrix recurrence_transition(const Matrix& a_corrected);

// ---------------------------------------------------------------------------
// Input vectors

enum class InputModel { Dirac, ZOH, FOH };

std::string to_string(InputModel model);
/// Accepts "dirac", "zoh", "foh" (case-insensitive).
InputModel parse_input_model(const std::string& name);

/// Dirac and ZOH produce one vector (v_next); FOH produces the pair used as
///   c_{t+delta} = A c_t + v_next u_{t+delta} + v_prev u_t.
struct InputVectors {
  InputModel model = InputModel::ZOH;
  Vector v_next;
  Vector v_prev;  // empty unless model == FOH

  bool is_pair() const noexcept { return model == InputModel::FOH; }
  bool operator==(const InputVectors&) const = default;
};

/// Dirac: phi_n(1) |f'(0)|.
/// ZOH:   I_1 = integral over [f(-delta), 1] of phi_n.
/// FOH:   v_next = I_1 + I_g / delta, v_prev = -I_g / delta, with
///        I_g = integral over [f(-delta), 1] of phi_n g.
InputVectors build_b_delta(const BasisSpec& basis, const WarpSpec& warp, double delta,
                           InputModel model, const QuadratureConfig& quad = {});

// ---------------------------------------------------------------------------
// Tools

/// Scaling and squaring with the [6/6] diagonal Pade approximant. The scaling
/// exponent is the smallest s >= 0 with ||M||_1 / 2^s <= 0.5.
Matrix matrix_exp(const Matrix& m);

inline constexpr int kPadeOrder = 6;
inline constexpr double kExpScaledNormBound = 0.5;

struct DiscreteLti {
  Matrix a;
  Vector b;
};

/// Tustin transform: a_bar = (I - delta/2 a)^{-1} (I + delta/2 a),
/// b_bar = (I - delta/2 a)^{-1} delta b.
DiscreteLti bilinear_discretize(const Matrix& a, std::span<const double> b, double delta);

/// ||m1 - m2||_F / ||m1||_F.
double frobenius_rel_diff(const Matrix& m1, const Matrix& m2);

/// ||v1 - v2||_2 / ||v1||_2.
double relative_diff(std::span<const double> v1, std::span<const double> v2);

struct StateSpaceBlock {
  Matrix a;
  Vector b;
};

/// Block-diagonal stacking of transitions with concatenated input vectors.
StateSpaceBlock compose_block_diagonal(std::span<const StateSpaceBlock> blocks);

// ---------------------------------------------------------------------------
// Bundles

struct DiscreteMatrices {
  double delta = 0.0;
  Matrix a_delta;
  Matrix a_corrected;
  InputVectors b_delta;
};

DiscreteMatrices build_discrete(const BasisSpec& basis, const WarpSpec& warp, double delta,
                                InputModel model, const QuadratureConfig& quad = {},
                                const TransitionOptions& transition = {},
                                const CorrectionOptions& correction = {});

}  // namespace lagssm

#endif  // LAGSSM_MATRICES_HPP
