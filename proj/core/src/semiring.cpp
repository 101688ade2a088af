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


#include "tropgeo/semiring.hpp"

#include <ostream>
#include <sstream>

#include "tropgeo/error.hpp"

namespace tropgeo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view to_string(Flavor f) {
  return f == Flavor::MaxPlus ? "max-plus" : "min-plus";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "max-plus") return Flavor::MaxPlus;
  if (text == "min-plus") return Flavor::MinPlus;
  throw ParseError("unknown flavor '" + std::string(text) +
                   "' (expected max-plus or min-plus)");
}

void require_same_length(const TropVector& x, const TropVector& y,
                         std::string_view what) {
  if (x.size() != y.size()) {
    throw DimensionError(std::string(what) + ": incompatible lengths " +
                         std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
  }
}

// ---------------------------------------------------------------------------
// TropVector

TropVector::TropVector(std::initializer_list<Scalar> entries)
    : TropVector(std::vector<Scalar>(entries)) {}

TropVector::TropVector(std::vector<Scalar> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("vector must have length >= 1");
}

std::string TropVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].str();
  }
  out += ')';
  return out;
}

TropVector TropVector::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') {
      throw ParseError("unbalanced parenthesis in vector '" +
                       std::string(text) + "'");
    }
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Scalar> entries;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto field = trim(text.substr(start, comma - start));
    try {
      entries.push_back(Scalar::parse(field));
    } catch (const ParseError& e) {
      throw ParseError("vector entry " + std::to_string(entries.size()) +
                       ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TropVector(std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const TropVector& v) {
  return os << v.str();
}

// ---------------------------------------------------------------------------
// TropMatrix

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix must have at least one row and column");
  }
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols,
                       std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix must have at least one row and column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("entry count mismatch: expected " +
                         std::to_string(rows_ * cols_) + ", got " +
                         std::to_string(entries_.size()));
  }
}

TropMatrix TropMatrix::from_columns(std::span<const TropVector> columns) {
  if (columns.empty()) throw DimensionError("no columns");
  std::size_t n = columns.front().size();
  std::vector<Scalar> entries(n * columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) {
      throw DimensionError("columns of unequal length");
    }
    for (std::size_t i = 0; i < n; ++i) {
      entries[i * columns.size() + j] = columns[j][i];
    }
  }
  return TropMatrix(n, columns.size(), std::move(entries));
}

TropMatrix TropMatrix::from_rows(std::span<const TropVector> rows) {
  if (rows.empty()) throw DimensionError("no rows");
  std::size_t m = rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * m);
  for (const auto& r : rows) {
    if (r.size() != m) throw DimensionError("rows of unequal length");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return TropMatrix(rows.size(), m, std::move(entries));
}

TropVector TropMatrix::row(std::size_t i) const {
  if (i >= rows_) throw DimensionError("row index out of range");
  return TropVector(std::vector<Scalar>(entries_.begin() + i * cols_,
                                        entries_.begin() + (i + 1) * cols_));
}

TropVector TropMatrix::column(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return TropVector(std::move(out));
}

std::vector<TropVector> TropMatrix::columns() const {
  std::vector<TropVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

TropMatrix TropMatrix::transpose() const {
  std::vector<Scalar> out(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out[j * rows_ + i] = (*this)(i, j);
    }
  }
  return TropMatrix(cols_, rows_, std::move(out));
}

std::string TropMatrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ',';
      out += (*this)(i, j).str();
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const TropMatrix& m) {
  return os << m.str();
}

// ---------------------------------------------------------------------------
// Operations

TropVector trop_add(Flavor f, const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "trop_add");
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(trop_plus(f, x[i], y[i]));
  }
  return TropVector(std::move(out));
}

TropVector scale(const Scalar& lambda, const TropVector& x) {
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (const auto& xi : x) out.push_back(xi + lambda);
  return TropVector(std::move(out));
}

TropMatrix trop_mat_mul(Flavor f, const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("trop_mat_mul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  std::vector<Scalar> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = a(i, 0) + b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) {
        acc = trop_plus(f, acc, a(i, k) + b(k, j));
      }
      out.push_back(std::move(acc));
    }
  }
  return TropMatrix(a.rows(), b.cols(), std::move(out));
}

TropVector trop_mat_vec(Flavor f, const TropMatrix& a, const TropVector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("trop_mat_vec: matrix has " +
                         std::to_string(a.cols()) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
  }
  std::vector<Scalar> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = a(i, 0) + x[0];
    for (std::size_t k = 1; k < a.cols(); ++k) {
      acc = trop_plus(f, acc, a(i, k) + x[k]);
    }
    out.push_back(std::move(acc));
  }
  return TropVector(std::move(out));
}

TropVector trop_vec_mat(Flavor f, const TropVector& x, const TropMatrix& a) {
  if (a.rows() != x.size()) {
    throw DimensionError("trop_vec_mat: vector has " +
                         std::to_string(x.size()) + " entries, matrix has " +
                         std::to_string(a.rows()) + " rows");
  }
  std::vector<Scalar> out;
  out.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar acc = x[0] + a(0, j);
    for (std::size_t k = 1; k < a.rows(); ++k) {
      acc = trop_plus(f, acc, x[k] + a(k, j));
    }
    out.push_back(std::move(acc));
  }
  return TropVector(std::move(out));
}

bool leq(const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

TropVector negate(const TropVector& x) {
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (const auto& xi : x) out.push_back(-xi);
  return TropVector(std::move(out));
}

TropMatrix negate(const TropMatrix& a) {
  std::vector<Scalar> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(-e);
  return TropMatrix(a.rows(), a.cols(), std::move(out));
}

TropMatrix negate_transpose(const TropMatrix& a) {
  return negate(a.transpose());
}

}  // namespace tropgeo
