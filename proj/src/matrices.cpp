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

#include "lagssm/matrices.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "lagssm/errors.hpp"
#include "lagssm/kernels.hpp"

namespace lagssm {

namespace {

void require_finite_delta(double delta) {
  if (!std::isfinite(delta) || delta < 0.0) {
    throw ArgumentError("delta must be finite and nonnegative, got " + std::to_string(delta));
  }
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square() || a.rows() == 0) {
    throw ArgumentError(std::string(what) + ": expected a nonempty square matrix");
  }
}

// g(n, m) = sum_i left[n, i] * right[m, i], both tables n_basis x count.
Matrix gram(const std::vector<double>& left, const std::vector<double>& right,
            std::size_t n_basis, std::size_t count) {
  Matrix out(n_basis, n_basis);
  for (std::size_t n = 0; n < n_basis; ++n) {
    const std::span<const double> ln(left.data() + n * count, count);
    for (std::size_t m = 0; m < n_basis; ++m) {
      out(n, m) = kernels::dot(ln, std::span<const double>(right.data() + m * count, count));
    }
  }
  return out;
}

void scale_columns(std::vector<double>& table, std::size_t count, std::span<const double> s) {
  for (std::size_t k = 0; k < table.size(); ++k) table[k] *= s[k % count];
}

// Weighted moments v(n) = sum_i w_i phi_n(z_i).
Vector moments(const BasisSpec& basis, const CompositeRule& rule, std::span<const double> w) {
  const std::size_t n = basis.n_basis;
  const std::vector<double> table = kernels::legendre_table(n, rule.nodes);
  Vector v(n);
  kernels::gemv(table, n, rule.nodes.size(), w, v);
  return v;
}

void check_finite(const Matrix& a, const char* what) {
  if (!all_finite(a)) throw NumericError(std::string(what) + " has non-finite entries");
}

void check_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw NumericError(std::string(what) + " has non-finite entries");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Matrix build_a_gen(const BasisSpec& basis, const WarpSpec& warp, const QuadratureConfig& quad) {
  validate(basis);
  validate(warp);
  const CompositeRule rule = composite_rule(0.0, 1.0, quad);
  const std::size_t n = basis.n_basis;
  const std::size_t count = rule.nodes.size();

  std::vector<double> left = kernels::legendre_table(n, rule.nodes);
  scale_columns(left, count, rule.weights);

  std::vector<double> inv_gp(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double gp = warp.g_prime(rule.nodes[i]);
    if (!std::isfinite(gp) || gp == 0.0) {
      throw EvaluationError("g' is zero or non-finite", rule.nodes[i]);
    }
    inv_gp[i] = 1.0 / gp;
  }
  std::vector<double> right = kernels::legendre_deriv_table(n, rule.nodes);
  scale_columns(right, count, inv_gp);

  Matrix a = gram(left, right, n, count);
  check_finite(a, "a_gen");
  return a;
}

Vector build_b_gen(const BasisSpec& basis, const WarpSpec& warp) {
  validate(warp);
  Vector b = boundary_values(basis);
  const double fp0 = warp.f_prime(0.0);
  for (double& x : b) x *= fp0;
  return b;
}

GeneratorMatrices build_generators(const BasisSpec& basis, const WarpSpec& warp,
                                   const QuadratureConfig& quad) {
  return {build_a_gen(basis, warp, quad), build_b_gen(basis, warp), basis, warp};
}

HippoReference hippo_legs_reference(std::size_t n_basis) {
  validate(BasisSpec{BasisFamily::LegendreShifted, n_basis});
  HippoReference ref{Matrix(n_basis, n_basis), Vector(n_basis)};
  for (std::size_t n = 0; n < n_basis; ++n) {
    const double rn = std::sqrt(2.0 * n + 1.0);
    ref.b_hippo[n] = rn;
    for (std::size_t m = 0; m < n; ++m) ref.a_hippo(n, m) = -rn * std::sqrt(2.0 * m + 1.0);
    ref.a_hippo(n, n) = -(static_cast<double>(n) + 1.0);
  }
  return ref;
}

// ---------------------------------------------------------------------------

Matrix build_a_delta(const BasisSpec& basis, const WarpSpec& warp, double delta,
                     const QuadratureConfig& quad, const TransitionOptions& opts) {
  validate(basis);
  validate(warp);
  require_finite_delta(delta);
  if (delta > opts.max_delta && !opts.allow_large_delta) {
    std::ostringstream msg;
    msg << "delta = " << delta << " exceeds the cap " << opts.max_delta
        << "; set allow_large_delta to override";
    throw ArgumentError(msg.str());
  }
  const CompositeRule rule = composite_rule(0.0, 1.0, quad);
  const std::size_t n = basis.n_basis;
  const std::size_t count = rule.nodes.size();

  std::vector<double> left = kernels::legendre_table(n, rule.nodes);
  scale_columns(left, count, rule.weights);

  std::vector<double> lagged(count);
  for (std::size_t i = 0; i < count; ++i) lagged[i] = lag(warp, delta, rule.nodes[i]);
  const std::vector<double> right = kernels::legendre_table(n, lagged);

  Matrix a = gram(left, right, n, count);
  check_finite(a, "a_delta");
  return a;
}

namespace {

Matrix scaled_inverse(const Matrix& a_delta, double factor, const CorrectionOptions& opts) {
  const LuDecomposition lu(a_delta);
  if (lu.singular()) throw NumericError("a_delta is singular");
  Matrix inv = lu.inverse();
  const double cond = norm1(a_delta) * norm1(inv);
  if (!(cond <= opts.max_condition)) {
    std::ostringstream msg;
    msg << "a_delta is ill-conditioned: cond_1 = " << cond << " exceeds " << opts.max_condition;
    throw NumericError(msg.str());
  }
  Matrix out = factor * inv;
  check_finite(out, "corrected transition");
  return out;
}

}  // namespace

Matrix correct_a_delta(const Matrix& a_delta, double delta, const CorrectionOptions& opts) {
  require_square(a_delta, "correct_a_delta");
  require_finite_delta(delta);
  return scaled_inverse(a_delta, std::exp(-delta), opts);
}

Matrix correct_a_delta(const Matrix& a_delta, double delta, const WarpSpec& warp,
                       const CorrectionOptions& opts) {
  require_square(a_delta, "correct_a_delta");
  require_finite_delta(delta);
  validate(warp);
  return scaled_inverse(a_delta, std::exp(-delta / warp.rate), opts);
}

Matrix backward_shift(const Matrix& a_delta, double delta) {
  require_square(a_delta, "backward_shift");
  require_finite_delta(delta);
  return std::exp(delta) * a_delta;
}

Matrix backward_shift(const Matrix& a_delta, double delta, const WarpSpec& warp) {
  require_square(a_delta, "backward_shift");
  require_finite_delta(delta);
  validate(warp);
  return std::exp(delta / warp.rate) * a_delta;
}

Matrix recurrence_transition(const Matrix& a_corrected) {
  require_square(a_corrected, "recurrence_transition");
  return a_corrected.transpose();
}

// ---------------------------------------------------------------------------

std::string to_string(InputModel model) {
  switch (model) {
    case InputModel::Dirac:
      return "dirac";
    case InputModel::ZOH:
      return "zoh";
    case InputModel::FOH:
      return "foh";
  }
  return "unknown";
}

InputModel parse_input_model(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "dirac") return InputModel::Dirac;
  if (s == "zoh") return InputModel::ZOH;
  if (s == "foh") return InputModel::FOH;
  throw ArgumentError("unknown input model '" + name + "' (expected dirac, zoh or foh)");
}

InputVectors build_b_delta(const BasisSpec& basis, const WarpSpec& warp, double delta,
                           InputModel model, const QuadratureConfig& quad) {
  validate(basis);
  validate(warp);
  require_finite_delta(delta);
  InputVectors out;
  out.model = model;

  if (model == InputModel::Dirac) {
    out.v_next = boundary_values(basis);
    const double scale = std::abs(warp.f_prime(0.0));
    for (double& x : out.v_next) x *= scale;
    return out;
  }
  if (model == InputModel::FOH && delta == 0.0) {
    throw ArgumentError("first-order hold needs delta > 0");
  }

  const CompositeRule rule = composite_rule(warp.f(-delta), 1.0, quad);
  out.v_next = moments(basis, rule, rule.weights);
  check_finite(out.v_next, "zoh input vector");
  if (model == InputModel::ZOH) return out;

  std::vector<double> wg(rule.nodes.size());
  for (std::size_t i = 0; i < wg.size(); ++i) wg[i] = rule.weights[i] * warp.g(rule.nodes[i]);
  const Vector i_g = moments(basis, rule, wg);
  out.v_prev.resize(i_g.size());
  for (std::size_t n = 0; n < i_g.size(); ++n) {
    out.v_next[n] += i_g[n] / delta;
    out.v_prev[n] = -i_g[n] / delta;
  }
  check_finite(out.v_next, "foh input vector");
  check_finite(out.v_prev, "foh input vector");
  return out;
}

// ---------------------------------------------------------------------------

Matrix matrix_exp(const Matrix& m) {
  require_square(m, "matrix_exp");
  if (!all_finite(m)) throw ArgumentError("matrix_exp: non-finite input");
  // c_j = (2q - j)! q! / ((2q)! j! (q - j)!), q = 6.
  constexpr std::array<double, kPadeOrder + 1> c = {
      1.0, 1.0 / 2.0, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};

  const double norm = norm1(m);
  int s = 0;
  if (norm > kExpScaledNormBound) {
    s = static_cast<int>(std::ceil(std::log2(norm / kExpScaledNormBound)));
    while (std::ldexp(norm, -s) > kExpScaledNormBound) ++s;
  }
  const Matrix x = std::ldexp(1.0, -s) * m;
  const std::size_t n = m.rows();

  Matrix power = Matrix::identity(n);
  Matrix num = Matrix::identity(n);
  Matrix den = Matrix::identity(n);
  for (int j = 1; j <= kPadeOrder; ++j) {
    power = power * x;
    num = num + c[j] * power;
    den = den + ((j % 2 == 0) ? c[j] : -c[j]) * power;
  }
  const LuDecomposition lu(den);
  if (lu.singular()) throw NumericError("matrix_exp: singular Pade denominator");
  Matrix r = lu.solve(num);
  for (int i = 0; i < s; ++i) r = r * r;
  check_finite(r, "matrix_exp result");
  return r;
}

DiscreteLti bilinear_discretize(const Matrix& a, std::span<const double> b, double delta) {
  require_square(a, "bilinear_discretize");
  if (b.size() != a.rows()) throw ArgumentError("bilinear_discretize: b has the wrong length");
  require_finite_delta(delta);
  const std::size_t n = a.rows();
  const Matrix half = (0.5 * delta) * a;
  const Matrix eye = Matrix::identity(n);
  const LuDecomposition lu(eye - half);
  if (lu.singular()) throw NumericError("bilinear_discretize: singular resolvent");
  Vector db(b.begin(), b.end());
  for (double& v : db) v *= delta;
  DiscreteLti out{lu.solve(eye + half), lu.solve(db)};
  check_finite(out.a, "bilinear transition");
  check_finite(out.b, "bilinear input");
  return out;
}

double frobenius_rel_diff(const Matrix& m1, const Matrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) {
    throw ArgumentError("frobenius_rel_diff: shape mismatch");
  }
  const double ref = frobenius_norm(m1);
  if (ref == 0.0) throw ArgumentError("frobenius_rel_diff: reference matrix is zero");
  return frobenius_norm(m1 - m2) / ref;
}

double relative_diff(std::span<const double> v1, std::span<const double> v2) {
  if (v1.size() != v2.size()) throw ArgumentError("relative_diff: length mismatch");
  const double ref = norm2(v1);
  if (ref == 0.0) throw ArgumentError("relative_diff: reference vector is zero");
  Vector d(v1.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = v1[i] - v2[i];
  return norm2(d) / ref;
}

StateSpaceBlock compose_block_diagonal(std::span<const StateSpaceBlock> blocks) {
  if (blocks.empty()) throw ArgumentError("compose_block_diagonal: no blocks");
  std::size_t total = 0;
  for (const auto& blk : blocks) {
    require_square(blk.a, "compose_block_diagonal");
    if (blk.b.size() != blk.a.rows()) {
      throw ArgumentError("compose_block_diagonal: block input length mismatch");
    }
    total += blk.a.rows();
  }
  StateSpaceBlock out{Matrix(total, total), Vector()};
  out.b.reserve(total);
  std::size_t off = 0;
  for (const auto& blk : blocks) {
    const std::size_t n = blk.a.rows();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) out.a(off + r, off + c) = blk.a(r, c);
    }
    out.b.insert(out.b.end(), blk.b.begin(), blk.b.end());
    off += n;
  }
  return out;
}

DiscreteMatrices build_discrete(const BasisSpec& basis, const WarpSpec& warp, double delta,
                                InputModel model, const QuadratureConfig& quad,
                                const TransitionOptions& transition,
                                const CorrectionOptions& correction) {
  DiscreteMatrices out;
  out.delta = delta;
  out.a_delta = build_a_delta(basis, warp, delta, quad, transition);
  out.a_corrected = correct_a_delta(out.a_delta, delta, warp, correction);
  out.b_delta = build_b_delta(basis, warp, delta, model, quad);
  return out;
}

}  // namespace lagssm
