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

#include "io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

namespace spacetime::cli {

using nlohmann::json;

BlockStructure MatrixFile::block_structure() const {
  if (dims.size() != 2) {
    throw InputError("expected a bipartite matrix file with dims [dA, dB]");
  }
  return BlockStructure{dims[0], dims[1]};
}

static double finite_number(const json& v) {
  if (!v.is_number()) throw InputError("matrix entries must be [re, im] number pairs");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError("matrix entries must be finite");
  return x;
}

MatrixFile matrix_file_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("matrix file must be a JSON object");
  if (!doc.contains("dims") || !doc.contains("matrix")) {
    throw InputError("matrix file needs \"dims\" and \"matrix\"");
  }
  MatrixFile file;
  const json& dims = doc.at("dims");
  if (!dims.is_array() || dims.empty() || dims.size() > 2) {
    throw InputError("\"dims\" must be [d] or [dA, dB]");
  }
  Index side = 1;
  for (const json& d : dims) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw InputError("\"dims\" entries must be positive integers");
    }
    file.dims.push_back(d.get<Index>());
    side *= file.dims.back();
  }

  const json& rows = doc.at("matrix");
  if (!rows.is_array() || static_cast<Index>(rows.size()) != side) {
    throw InputError("\"matrix\" must have " + std::to_string(side) + " rows");
  }
  file.matrix.resize(side, side);
  for (Index i = 0; i < side; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != side) {
      throw InputError("row " + std::to_string(i) + " must have " + std::to_string(side) +
                       " entries");
    }
    for (Index j = 0; j < side; ++j) {
      const json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2) {
        throw InputError("matrix entries must be [re, im] number pairs");
      }
      file.matrix(i, j) = Complex(finite_number(entry[0]), finite_number(entry[1]));
    }
  }

  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw InputError("\"label\" must be a string");
    file.label = doc.at("label").get<std::string>();
  }
  return file;
}

json matrix_file_to_json(const MatrixFile& file) {
  json rows = json::array();
  for (Index i = 0; i < file.matrix.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < file.matrix.cols(); ++j) {
      row.push_back({file.matrix(i, j).real(), file.matrix(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  json doc = {{"dims", file.dims}, {"matrix", std::move(rows)}};
  if (file.label) doc["label"] = *file.label;
  return doc;
}

std::string serialize_matrix_file(const MatrixFile& file) {
  return matrix_file_to_json(file).dump() + "\n";
}

MatrixFile parse_matrix_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_file_from_json(doc);
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
  if (!file) throw InputError("failed writing " + path);
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int k = 0; k < len; ++k) hex << std::setw(2) << static_cast<int>(digest[k]);
  return hex.str();
}

}  // namespace spacetime::cli
