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

// Experiment configuration and the computations behind the CLI commands.
// compute_* functions return data; run_* functions also write files and check
// the built-in tolerances, returning a process exit status.

#ifndef LAGSSM_EXPERIMENT_HPP
#define LAGSSM_EXPERIMENT_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lagssm/basis.hpp"
#include "lagssm/io.hpp"
#include "lagssm/matrices.hpp"
#include "lagssm/quadrature.hpp"
#include "lagssm/recurrence.hpp"
#include "lagssm/signals.hpp"
#include "lagssm/warp.hpp"

namespace lagssm {

enum class SignalKind { Lorenz, Sine, Csv };
enum class ShiftDirection { Forward, Backward };

std::string to_string(SignalKind kind);
std::string to_string(ShiftDirection dir);
ShiftDirection parse_shift_direction(const std::string& name);

struct SignalSource {
  SignalKind kind = SignalKind::Lorenz;
  LorenzParams lorenz;  // dt and steps are taken from the experiment
  std::vector<double> sine_freqs = {0.5};
  std::vector<double> sine_amps = {1.0};
  std::vector<double> sine_phases = {0.0};
  std::filesystem::path csv_path;
  /// Zero mean, unit max-abs.
  bool normalize = true;
};

/// Parses "lorenz", "sine" or "csv:PATH" into `src`, keeping other fields.
void apply_signal_descriptor(SignalSource& src, const std::string& descriptor);

struct ExperimentConfig {
  std::size_t n_basis = 64;
  double delta = 0.01;
  double total_time = 10.0;
  WarpSpec warp;
  InputModel input_model = InputModel::ZOH;
  QuadratureConfig quad;
  SignalSource signal;
  std::filesystem::path output_dir = "out";

  std::size_t recon_points = 1000;
  double mse_tolerance = 1e-5;

  std::size_t n_show = 63;
  ShiftDirection direction = ShiftDirection::Backward;
  std::size_t lagshift_points = 500;
};

void validate(const ExperimentConfig& cfg);

/// JSON schema (every key optional, unknown keys rejected):
///   n_basis, delta, total_time, warp {family, tau}, input_model,
///   quadrature {points_per_panel, panels},
///   signal {kind, normalize, csv_path, sine {freqs, amps, phases},
///           lorenz {sigma, rho, beta, x0, burn_in}},
///   output_dir, reconstruct {grid_points, mse_tolerance},
///   lagshift {n_show, direction, grid_points}
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& cfg);

/// Number of samples covering total_time.
std::size_t signal_steps(const ExperimentConfig& cfg);
SignalTrace make_signal(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// tables

struct TableRow {
  double parameter = 0.0;
  double diff = 0.0;
};

struct Table3Row {
  double delta = 0.0;
  double diff = 0.0;        // vs bilinear HiPPO
  double diff_exact = 0.0;  // vs matrix_exp(delta * a_hippo)
  double condition = 0.0;   // 1-norm condition of a_delta
};

struct TablesResult {
  std::vector<TableRow> table1;
  std::vector<TableRow> table2;
  std::vector<Table3Row> table3;
};

inline const std::vector<double> kTableDeltas = {1e-4, 1e-3, 1e-2, 1e-1};
inline const std::vector<std::size_t> kTableSizes = {10, 30, 50};

std::vector<TableRow> compute_table1(const ExperimentConfig& cfg);
std::vector<TableRow> compute_table2(const ExperimentConfig& cfg);
std::vector<Table3Row> compute_table3(const ExperimentConfig& cfg);
TablesResult compute_tables(const ExperimentConfig& cfg);

/// Tolerance violations, empty when all hold.
std::vector<std::string> check_tables(const TablesResult& r);

// ---------------------------------------------------------------------------
// reconstruct

struct ReconstructionResult {
  std::vector<double> s;
  std::vector<double> u_true;
  std::vector<double> u_hat;
  std::vector<double> u_hat_baseline;
  std::vector<double> omega;
  std::vector<MemoryState> states;  // lag-model trajectory
  double t_final = 0.0;
  double mse = 0.0;
  double max_abs_u = 0.0;
};

ReconstructionResult compute_reconstruction(const ExperimentConfig& cfg, const SignalTrace& trace);

// ---------------------------------------------------------------------------
// lagshift

struct LagshiftResult {
  std::vector<double> s;
  std::vector<double> original;
  std::vector<double> shifted;
};

LagshiftResult compute_lagshift(const ExperimentConfig& cfg);
void save_lagshift_csv(const std::filesystem::path& path, const LagshiftResult& r);

// ---------------------------------------------------------------------------
// matrices

io::MatrixDump compute_matrix_dump(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// commands

int run_tables(const ExperimentConfig& cfg, std::ostream& log);
int run_reconstruct(const ExperimentConfig& cfg, std::ostream& log);
int run_lagshift(const ExperimentConfig& cfg, std::ostream& log);
int run_matrices(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace lagssm

#endif  // LAGSSM_EXPERIMENT_HPP
