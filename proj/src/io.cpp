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

#include "lagssm/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "lagssm/errors.hpp"

namespace lagssm::io {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ArgumentError("ragged matrix in JSON");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

json metadata_to_json(const MatrixMetadata& meta) {
  return {{"schema_version", kSchemaVersion},
          {"N", meta.n_basis},
          {"delta", meta.delta},
          {"warp", to_string(meta.warp.family)},
          {"tau", meta.warp.rate},
          {"input_model", to_string(meta.input_model)},
          {"quadrature", {{"points_per_panel", meta.quad.points_per_panel},
                          {"panels", meta.quad.panels}}}};
}

MatrixMetadata metadata_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw ArgumentError("unsupported schema_version");
  }
  MatrixMetadata meta;
  meta.n_basis = j.at("N").get<std::size_t>();
  meta.delta = j.at("delta").get<double>();
  meta.warp.family = parse_warp_family(j.at("warp").get<std::string>());
  meta.warp.rate = j.at("tau").get<double>();
  meta.input_model = parse_input_model(j.at("input_model").get<std::string>());
  meta.quad.points_per_panel = j.at("quadrature").at("points_per_panel").get<int>();
  meta.quad.panels = j.at("quadrature").at("panels").get<int>();
  return meta;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw ArgumentError("not a number: '" + s + "'");
  return v;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table,
               const std::vector<std::string>& comments) {
  std::ofstream out = open_out(path);
  for (const auto& c : comments) out << c << '\n';
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  if (!table.header.empty()) out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      table.header = split(line, ',');
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) row.push_back(parse_double(cell));
    if (row.size() != table.header.size()) {
      throw ArgumentError("CSV row width differs from header in " + path.string());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void save_trace_csv(const std::filesystem::path& path, const SignalTrace& trace) {
  CsvTable t{{"t", "u"}, {}};
  t.rows.reserve(trace.size());
  for (std::size_t k = 0; k < trace.size(); ++k) t.rows.push_back({trace.times[k], trace.values[k]});
  write_csv(path, t);
}

SignalTrace load_trace_csv(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path);
  if (t.header.size() != 2 || t.header[0] != "t" || t.header[1] != "u") {
    throw ArgumentError("trace CSV must have columns t,u: " + path.string());
  }
  if (t.rows.size() < 2) throw ArgumentError("trace CSV needs at least two rows");
  SignalTrace trace;
  trace.delta = t.rows[1][0] - t.rows[0][0];
  for (const auto& r : t.rows) {
    trace.times.push_back(r[0]);
    trace.values.push_back(r[1]);
  }
  validate(trace);
  return trace;
}

std::string metadata_record(const MatrixMetadata& meta) {
  std::ostringstream s;
  s << "# schema_version=" << kSchemaVersion << ",N=" << meta.n_basis
    << ",delta=" << format_double(meta.delta) << ",warp=" << to_string(meta.warp.family)
    << ",tau=" << format_double(meta.warp.rate) << ",input_model=" << to_string(meta.input_model)
    << ",quad_points=" << meta.quad.points_per_panel << ",quad_panels=" << meta.quad.panels;
  return s.str();
}

MatrixMetadata parse_metadata_record(const std::string& line) {
  if (line.rfind("# ", 0) != 0) throw ArgumentError("metadata record must start with '# '");
  std::map<std::string, std::string> kv;
  for (const auto& item : split(line.substr(2), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ArgumentError("malformed metadata item '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  const auto get = [&kv](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ArgumentError(std::string("metadata lacks ") + key);
    return it->second;
  };
  if (std::stoi(get("schema_version")) != kSchemaVersion) {
    throw ArgumentError("unsupported schema_version");
  }
  MatrixMetadata meta;
  meta.n_basis = std::stoul(get("N"));
  meta.delta = parse_double(get("delta"));
  meta.warp.family = parse_warp_family(get("warp"));
  meta.warp.rate = parse_double(get("tau"));
  meta.input_model = parse_input_model(get("input_model"));
  meta.quad.points_per_panel = std::stoi(get("quad_points"));
  meta.quad.panels = std::stoi(get("quad_panels"));
  return meta;
}

void save_matrix_csv(const std::filesystem::path& path, const Matrix& m, const MatrixMetadata& meta) {
  CsvTable t;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    t.rows.emplace_back(row.begin(), row.end());
  }
  write_csv(path, t, {metadata_record(meta)});
}

Matrix load_matrix_csv(const std::filesystem::path& path, MatrixMetadata* meta) {
  std::ifstream in = open_in(path);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool have_meta = false;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!have_meta && meta) *meta = parse_metadata_record(line);
      have_meta = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) row.push_back(parse_double(cell));
    rows.push_back(std::move(row));
  }
  if (!have_meta) throw ArgumentError("matrix CSV lacks a metadata record: " + path.string());
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ArgumentError("ragged matrix CSV: " + path.string());
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void save_state_trajectory_csv(const std::filesystem::path& path,
                               const std::vector<MemoryState>& states) {
  CsvTable t;
  t.header.push_back("t");
  const std::size_t n = states.empty() ? 0 : states.front().coeffs.size();
  for (std::size_t i = 0; i < n; ++i) t.header.push_back("c_" + std::to_string(i));
  t.rows.reserve(states.size());
  for (const auto& s : states) {
    std::vector<double> row{s.t};
    row.insert(row.end(), s.coeffs.begin(), s.coeffs.end());
    t.rows.push_back(std::move(row));
  }
  write_csv(path, t);
}

std::string to_json(const MatrixDump& dump) {
  json j;
  j["header"] = metadata_to_json(dump.meta);
  j["a_gen"] = matrix_to_json(dump.a_gen);
  j["b_gen"] = dump.b_gen;
  j["a_delta"] = matrix_to_json(dump.a_delta);
  j["a_corrected"] = matrix_to_json(dump.a_corrected);
  json b = json::object();
  for (const auto& [model, vecs] : dump.b_delta) {
    json entry = {{"v_next", vecs.v_next}};
    if (vecs.is_pair()) entry["v_prev"] = vecs.v_prev;
    b[to_string(model)] = std::move(entry);
  }
  j["b_delta"] = std::move(b);
  j["a_hippo"] = matrix_to_json(dump.a_hippo);
  j["b_hippo"] = dump.b_hippo;
  return j.dump(1) + "\n";
}

MatrixDump matrix_dump_from_json(const std::string& text) {
  const json j = json::parse(text);
  MatrixDump d;
  d.meta = metadata_from_json(j.at("header"));
  d.a_gen = matrix_from_json(j.at("a_gen"));
  d.b_gen = j.at("b_gen").get<Vector>();
  d.a_delta = matrix_from_json(j.at("a_delta"));
  d.a_corrected = matrix_from_json(j.at("a_corrected"));
  for (const auto& [name, entry] : j.at("b_delta").items()) {
    InputVectors v;
    v.model = parse_input_model(name);
    v.v_next = entry.at("v_next").get<Vector>();
    if (v.is_pair()) v.v_prev = entry.at("v_prev").get<Vector>();
    d.b_delta[v.model] = std::move(v);
  }
  d.a_hippo = matrix_from_json(j.at("a_hippo"));
  d.b_hippo = j.at("b_hippo").get<Vector>();
  return d;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out = open_out(path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace lagssm::io
