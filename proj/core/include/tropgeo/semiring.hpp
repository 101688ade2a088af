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


#ifndef TROPGEO_SEMIRING_HPP
#define TROPGEO_SEMIRING_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropgeo/scalar.hpp"

namespace tropgeo {

/// Which idempotent addition is in force. Multiplication is ordinary + in
/// both cases.
enum class Flavor { MaxPlus, MinPlus };

constexpr Flavor dual(Flavor f) {
  return f == Flavor::MaxPlus ? Flavor::MinPlus : Flavor::MaxPlus;
}

/// "max-plus" / "min-plus".
std::string_view to_string(Flavor f);
/// Inverse of to_string; throws ParseError.
Flavor parse_flavor(std::string_view text);

/// The flavor's addition on scalars: max for MaxPlus, min for MinPlus.
inline Scalar trop_plus(Flavor f, const Scalar& a, const Scalar& b) {
  return f == Flavor::MaxPlus ? max(a, b) : min(a, b);
}

/**
 * A point of R^n, n >= 1. Entries are fixed after construction.
 */
class TropVector {
 public:
  TropVector(std::initializer_list<Scalar> entries);
  explicit TropVector(std::vector<Scalar> entries);

  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// "(a,b,c)" with each entry in reduced rational form.
  std::string str() const;
  /// Accepts "a,b,c" or "(a,b,c)"; whitespace around entries is ignored.
  static TropVector parse(std::string_view text);

  friend bool operator==(const TropVector&, const TropVector&) = default;

 private:
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const TropVector& v);

/**
 * A dense rows x cols matrix, rows, cols >= 1, stored row-major.
 *
 * Matrices double as generator lists: column j is the j-th generator.
 */
class TropMatrix {
 public:
  /// Row-major nested initializer; every row must have the same length.
  TropMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  TropMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static TropMatrix from_columns(std::span<const TropVector> columns);
  static TropMatrix from_rows(std::span<const TropVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  TropVector row(std::size_t i) const;
  TropVector column(std::size_t j) const;
  std::vector<TropVector> columns() const;
  std::span<const Scalar> entries() const { return entries_; }

  TropMatrix transpose() const;

  /// "[[a,b],[c,d]]".
  std::string str() const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const TropMatrix& m);

/// Componentwise max (MaxPlus) or min (MinPlus): the join / meet of x and y
/// in the componentwise order.
TropVector trop_add(Flavor f, const TropVector& x, const TropVector& y);

/// Tropical scaling lambda (x) x = (x_1 + lambda, ..., x_n + lambda).
TropVector scale(const Scalar& lambda, const TropVector& x);

/// Entry (i,j) is the flavor's sum over k of A(i,k) + B(k,j).
TropMatrix trop_mat_mul(Flavor f, const TropMatrix& a, const TropMatrix& b);

/// Tropical matrix-vector product A (x) x, with x read as a column.
TropVector trop_mat_vec(Flavor f, const TropMatrix& a, const TropVector& x);
/// Tropical vector-matrix product x^T (x) A; the result is a row.
TropVector trop_vec_mat(Flavor f, const TropVector& x, const TropMatrix& a);

/// x <= y componentwise.
bool leq(const TropVector& x, const TropVector& y);

TropVector negate(const TropVector& x);
TropMatrix negate(const TropMatrix& a);

/// -A^T. An involution that swaps the max-plus and min-plus products:
/// -(A (x) B)^T = (-B^T) [x] (-A^T).
TropMatrix negate_transpose(const TropMatrix& a);

/// Throws DimensionError unless the two lengths agree.
void require_same_length(const TropVector& x, const TropVector& y,
                         std::string_view what);

}  // namespace tropgeo

#endif  // TROPGEO_SEMIRING_HPP
