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


#ifndef TROPGEO_TOOLS_DOCUMENT_HPP
#define TROPGEO_TOOLS_DOCUMENT_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "tropgeo/semiring.hpp"

namespace tropgeo::cli {

enum class Role { Matrix, GeneratorsAsColumns };

std::string_view to_string(Role r);

/**
 * The on-disk form of a matrix or generator list:
 *
 *   {"flavor": "max-plus", "rows": 2, "cols": 2,
 *    "entries": ["0", "1", "1", "0"], "role": "matrix"}
 *
 * Entries are row-major rational strings ("p" or "p/q"). "flavor" defaults
 * to max-plus and "role" to matrix when absent.
 */
struct MatrixDocument {
  Flavor flavor = Flavor::MaxPlus;
  Role role = Role::Matrix;
  TropMatrix matrix;

  friend bool operator==(const MatrixDocument&,
                         const MatrixDocument&) = default;
};

/// Throws ParseError naming the line/column or the offending field.
MatrixDocument parse_matrix_document(std::string_view text);

nlohmann::ordered_json to_json(const MatrixDocument& doc);
/// Single-line JSON with entries in reduced form.
std::string serialize(const MatrixDocument& doc);

}  // namespace tropgeo::cli

#endif  // TROPGEO_TOOLS_DOCUMENT_HPP
