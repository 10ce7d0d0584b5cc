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

// CSV and JSON serialization. Doubles are written in shortest round-trip form,
// so a save/load cycle is bit-exact.

#ifndef LAGSSM_IO_HPP
#define LAGSSM_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lagssm/basis.hpp"
#include "lagssm/linalg.hpp"
#include "lagssm/matrices.hpp"
#include "lagssm/quadrature.hpp"
#include "lagssm/recurrence.hpp"
#include "lagssm/warp.hpp"

namespace lagssm::io {

inline constexpr int kSchemaVersion = 1;

std::string format_double(double v);
/// Parses the whole string as a double; throws ArgumentError otherwise.
double parse_double(const std::string& s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Writes a header row and numeric rows. Lines starting with '#' in `comments`
/// are emitted first, one per entry.
void write_csv(const std::filesystem::path& path, const CsvTable& table,
               const std::vector<std::string>& comments = {});
/// Skips '#' lines; the first remaining line is the header.
CsvTable read_csv(const std::filesystem::path& path);

void save_trace_csv(const std::filesystem::path& path, const SignalTrace& trace);
/// Columns t,u. Needs at least two rows; spacing is taken from the first pair.
SignalTrace load_trace_csv(const std::filesystem::path& path);

/// Header record shared by every matrix file.
struct MatrixMetadata {
  std::size_t n_basis = 0;
  double delta = 0.0;
  WarpSpec warp;
  InputModel input_model = InputModel::ZOH;
  QuadratureConfig quad;

  bool operator==(const MatrixMetadata&) const = default;
};

/// "# schema_version=1,N=..,delta=..,warp=exp,tau=..,input_model=..,quad_points=..,quad_panels=.."
std::string metadata_record(const MatrixMetadata& meta);
MatrixMetadata parse_metadata_record(const std::string& line);

/// One CSV row per matrix row, no column header, metadata record first.
void save_matrix_csv(const std::filesystem::path& path, const Matrix& m, const MatrixMetadata& meta);
Matrix load_matrix_csv(const std::filesystem::path& path, MatrixMetadata* meta = nullptr);

void save_state_trajectory_csv(const std::filesystem::path& path,
                               const std::vector<MemoryState>& states);

/// Everything the matrices command dumps.
struct MatrixDump {
  MatrixMetadata meta;
  Matrix a_gen;
  Vector b_gen;
  Matrix a_delta;
  Matrix a_corrected;
  std::map<InputModel, InputVectors> b_delta;
  Matrix a_hippo;
  Vector b_hippo;

  bool operator==(const MatrixDump&) const = default;
};

std::string to_json(const MatrixDump& dump);
MatrixDump matrix_dump_from_json(const std::string& text);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace lagssm::io

#endif  // LAGSSM_IO_HPP
