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

// lagssm tables|reconstruct|lagshift|matrices [options]

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lagssm/errors.hpp"
#include "lagssm/experiment.hpp"
#include "lagssm/kernels.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::size_t> n;
  std::optional<double> delta;
  std::optional<double> total_time;
  std::optional<std::string> warp;
  std::optional<double> tau;
  std::optional<std::string> input_model;
  std::optional<int> quad_points;
  std::optional<int> quad_panels;
  std::optional<std::string> signal;
  std::optional<bool> normalize;
  std::optional<std::string> out;
  std::optional<std::size_t> n_show;
  std::optional<std::string> direction;
  std::optional<std::string> kernels;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file");
  cmd->add_option("--n", o.n, "basis size N");
  cmd->add_option("--delta", o.delta, "time step");
  cmd->add_option("--total-time", o.total_time, "signal duration T");
  cmd->add_option("--warp", o.warp, "warp family (exp)");
  cmd->add_option("--tau", o.tau, "warp rate");
  cmd->add_option("--input-model", o.input_model, "dirac|zoh|foh");
  cmd->add_option("--quad-points", o.quad_points, "Gauss points per panel");
  cmd->add_option("--quad-panels", o.quad_panels, "quadrature panels on (0, 1]");
  cmd->add_option("--signal", o.signal, "lorenz|sine|csv:PATH");
  cmd->add_option("--normalize", o.normalize, "zero-mean, unit max-abs input (true|false)");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--kernels", o.kernels, "scalar|avx2|neon (default: best available)");
}

lagssm::ExperimentConfig resolve(const Overrides& o) {
  lagssm::ExperimentConfig cfg = o.config.empty() ? lagssm::ExperimentConfig{}
                                                  : lagssm::load_config(o.config);
  if (o.n) cfg.n_basis = *o.n;
  if (o.delta) cfg.delta = *o.delta;
  if (o.total_time) cfg.total_time = *o.total_time;
  if (o.warp) cfg.warp.family = lagssm::parse_warp_family(*o.warp);
  if (o.tau) cfg.warp.rate = *o.tau;
  if (o.input_model) cfg.input_model = lagssm::parse_input_model(*o.input_model);
  if (o.quad_points) cfg.quad.points_per_panel = *o.quad_points;
  if (o.quad_panels) cfg.quad.panels = *o.quad_panels;
  if (o.signal) lagssm::apply_signal_descriptor(cfg.signal, *o.signal);
  if (o.normalize) cfg.signal.normalize = *o.normalize;
  if (o.out) cfg.output_dir = *o.out;
  if (o.n_show) cfg.n_show = *o.n_show;
  if (o.direction) cfg.direction = lagssm::parse_shift_direction(*o.direction);
  lagssm::validate(cfg);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lag-operator state-space memory models"};
  app.require_subcommand(1);

  Overrides o;
  CLI::App* tables = app.add_subcommand("tables", "generator, exponential-map and discretization tables");
  CLI::App* recon = app.add_subcommand("reconstruct", "lag model vs HiPPO-LegS reconstruction");
  CLI::App* lagshift = app.add_subcommand("lagshift", "lag-shifted basis function on a grid");
  CLI::App* matrices = app.add_subcommand("matrices", "dump all state-space matrices");
  for (CLI::App* cmd : {tables, recon, lagshift, matrices}) add_common(cmd, o);
  lagshift->add_option("--n-show", o.n_show, "basis index to shift");
  lagshift->add_option("--direction", o.direction, "forward|backward");

  CLI11_PARSE(app, argc, argv);

  try {
    if (o.kernels && !lagssm::kernels::select_kernels(*o.kernels)) {
      std::cerr << "error: kernel variant '" << *o.kernels << "' is not available\n";
      return 2;
    }
    const lagssm::ExperimentConfig cfg = resolve(o);
    if (tables->parsed()) return lagssm::run_tables(cfg, std::cout);
    if (recon->parsed()) return lagssm::run_reconstruct(cfg, std::cout);
    if (lagshift->parsed()) return lagssm::run_lagshift(cfg, std::cout);
    if (matrices->parsed()) return lagssm::run_matrices(cfg, std::cout);
  } catch (const lagssm::ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
