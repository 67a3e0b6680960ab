// Copyright 2026 The spacetime-swap Authors
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

// JSON matrix files and input hashing for the command-line tool.
//
// A matrix file is
//
//   {"dims": [dA, dB] or [d], "matrix": [[[re, im], ...], ...], "label": ...}
//
// with the matrix stored row-major and "label" optional.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spacetime/linalg.hpp"

namespace spacetime::cli {

/// Malformed input or invalid command-line usage (exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  std::vector<Index> dims;
  ComplexMatrix matrix;
  std::optional<std::string> label;

  /// {dims[0], dims[1]}; throws InputError unless dims has two entries.
  BlockStructure block_structure() const;
};

MatrixFile matrix_file_from_json(const nlohmann::json& doc);
nlohmann::json matrix_file_to_json(const MatrixFile& file);

std::string serialize_matrix_file(const MatrixFile& file);
MatrixFile parse_matrix_file(const std::string& text);

/// Raw bytes read from `path`, or from `in` when path is "-".
std::string read_input(const std::string& path, std::istream& in);
void write_output(const std::string& path, const std::string& text);

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(const std::string& bytes);

}  // namespace spacetime::cli
