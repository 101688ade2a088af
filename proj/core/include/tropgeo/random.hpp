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


#ifndef TROPGEO_RANDOM_HPP
#define TROPGEO_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "tropgeo/scalar.hpp"
#include "tropgeo/semiring.hpp"

namespace tropgeo {

/**
 * Seeded source of random rationals, vectors and matrices.
 *
 * Bounded draws are done by rejection on the raw engine output rather than
 * through std::uniform_int_distribution, whose algorithm is unspecified, so
 * a seed reproduces the same stream with any standard library.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return below(2) == 1; }

  /// p/q with |p| <= max_abs_numerator and 1 <= q <= max_denominator.
  Scalar rational(long max_abs_numerator, long max_denominator);
  /// A rational in [lo, hi] with denominator at most max_denominator.
  Scalar rational_in(const Scalar& lo, const Scalar& hi, long max_denominator);
  /// A rational strictly between 0 and 1 with denominator in [2, max_den].
  Scalar open_unit(long max_denominator);

  TropVector vector(std::size_t n, long max_abs_numerator,
                    long max_denominator);
  TropMatrix matrix(std::size_t rows, std::size_t cols, long max_abs_numerator,
                    long max_denominator);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tropgeo

#endif  // TROPGEO_RANDOM_HPP
