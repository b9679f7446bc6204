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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphon/matrix.hpp"
#include "json.hpp"

namespace graphon {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// k rows of k comma-separated decimals.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(std::string_view text);

// {"k": ..., "rho": ..., "entries": [[...], ...]}
nlohmann::json block_matrix_to_json(const BlockMatrix& a);
BlockMatrix block_matrix_from_json(const nlohmann::json& j);

// Format chosen by content: a leading '{' means JSON, anything else CSV.
// CSV files carry no bound, so `csv_rho` is used for them.
BlockMatrix load_block_matrix(const std::filesystem::path& path, double csv_rho = 1.0);
// Writes JSON for a ".json" extension, CSV otherwise.
void save_block_matrix(const std::filesystem::path& path, const BlockMatrix& a);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace graphon
