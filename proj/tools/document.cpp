/*
 *   Copyright 2026 The tropgeo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "document.hpp"

#include <algorithm>

#include "tropgeo/error.hpp"

namespace tropgeo::cli {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  auto before = text.substr(0, byte);
  auto line = 1 + std::count(before.begin(), before.end(), '\n');
  auto last_nl = before.rfind('\n');
  auto column = last_nl == std::string_view::npos ? byte + 1 : byte - last_nl;
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::size_t positive_count(const json& doc, const char* field) {
  if (!doc.contains(field)) {
    throw ParseError(std::string("missing field '") + field + "'");
  }
  const auto& v = doc.at(field);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw ParseError(std::string("field '") + field +
                     "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

Scalar parse_entry(const json& e, std::size_t index) {
  const std::string where = "field 'entries'[" + std::to_string(index) + "]";
  if (e.is_string()) {
    try {
      return Scalar::parse(e.get<std::string>());
    } catch (const ParseError& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  if (e.is_number_integer()) return Scalar(e.get<long>());
  throw ParseError(where + ": non-rational entry " + e.dump());
}

}  // namespace

std::string_view to_string(Role r) {
  return r == Role::Matrix ? "matrix" : "generators-as-columns";
}

MatrixDocument parse_matrix_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + line_column(text, e.byte - 1) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");

  Flavor flavor = Flavor::MaxPlus;
  if (doc.contains("flavor")) {
    if (!doc["flavor"].is_string()) {
      throw ParseError("field 'flavor' must be a string");
    }
    flavor = parse_flavor(doc["flavor"].get<std::string>());
  }
  Role role = Role::Matrix;
  if (doc.contains("role")) {
    const auto& r = doc["role"];
    if (r == "matrix") {
      role = Role::Matrix;
    } else if (r == "generators-as-columns") {
      role = Role::GeneratorsAsColumns;
    } else {
      throw ParseError("field 'role': unknown role " + r.dump());
    }
  }
  const auto rows = positive_count(doc, "rows");
  const auto cols = positive_count(doc, "cols");
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("field 'entries' must be an array");
  }
  const auto& entries = doc["entries"];
  if (entries.size() != rows * cols) {
    throw ParseError("entry count mismatch: rows*cols = " +
                     std::to_string(rows * cols) + " but 'entries' has " +
                     std::to_string(entries.size()));
  }
  std::vector<Scalar> values;
  values.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    values.push_back(parse_entry(entries[k], k));
  }
  return MatrixDocument{flavor, role, TropMatrix(rows, cols, std::move(values))};
}

nlohmann::ordered_json to_json(const MatrixDocument& doc) {
  nlohmann::ordered_json out;
  out["flavor"] = to_string(doc.flavor);
  out["rows"] = doc.matrix.rows();
  out["cols"] = doc.matrix.cols();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : doc.matrix.entries()) entries.push_back(e.str());
  out["entries"] = std::move(entries);
  out["role"] = to_string(doc.role);
  return out;
}

std::string serialize(const MatrixDocument& doc) { return to_json(doc).dump(); }

}  // namespace tropgeo::cli
