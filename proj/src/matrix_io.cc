// Copyright 2026 The Graphon Lab Authors.
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

#include "graphon/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "graphon/error.hpp"

namespace graphon {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error(ErrorCode::kIoError, "cannot format double");
  return std::string(buf, end);
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.k(); ++i) {
    for (int j = 0; j < m.k(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, int line) {
  field = trim(field);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ": not a number: '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

Matrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    while (true) {
      const size_t comma = line.find(',');
      row.push_back(parse_double(line.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

nlohmann::json block_matrix_to_json(const BlockMatrix& a) {
  return {{"k", a.k()}, {"rho", a.rho()}, {"entries", a.entries().to_rows()}};
}

BlockMatrix block_matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("entries").get<std::vector<std::vector<double>>>();
    const double rho = j.value("rho", 1.0);
    BlockMatrix a = make_block_matrix(rows, rho);
    if (j.contains("k") && j.at("k").get<int>() != a.k())
      throw Error(ErrorCode::kDimensionMismatch, "declared k does not match entries");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

BlockMatrix load_block_matrix(const std::filesystem::path& path, double csv_rho) {
  const std::string text = read_file(path);
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
    }
    return block_matrix_from_json(j);
  }
  return make_block_matrix(matrix_from_csv(text), csv_rho);
}

void save_block_matrix(const std::filesystem::path& path, const BlockMatrix& a) {
  if (path.extension() == ".json") {
    write_file(path, block_matrix_to_json(a).dump() + "\n");
  } else {
    write_file(path, matrix_to_csv(a.entries()));
  }
}

}  // namespace graphon
