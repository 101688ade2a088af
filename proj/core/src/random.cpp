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


#include "tropgeo/random.hpp"

#include <limits>

#include "tropgeo/error.hpp"

namespace tropgeo {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below: zero bound");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Reject the top partial block (2^64 mod bound values) so every residue is
  // equally likely.
  const std::uint64_t cutoff = kMax - ((kMax % bound) + 1) % bound;
  while (true) {
    std::uint64_t r = engine_();
    if (r <= cutoff) return r % bound;
  }
}

long Rng::integer(long lo, long hi) {
  if (hi < lo) throw PreconditionError("Rng::integer: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(below(span));
}

Scalar Rng::rational(long max_abs_numerator, long max_denominator) {
  long den = integer(1, max_denominator);
  long num = integer(-max_abs_numerator, max_abs_numerator);
  return Scalar(num, den);
}

Scalar Rng::rational_in(const Scalar& lo, const Scalar& hi,
                        long max_denominator) {
  if (hi < lo) throw PreconditionError("Rng::rational_in: empty range");
  long den = integer(1, max_denominator);
  // Pick a grid point k/den in [0,1] and interpolate.
  Scalar t(integer(0, den), den);
  return lo + t * (hi - lo);
}

Scalar Rng::open_unit(long max_denominator) {
  if (max_denominator < 2) max_denominator = 2;
  long den = integer(2, max_denominator);
  return Scalar(integer(1, den - 1), den);
}

TropVector Rng::vector(std::size_t n, long max_abs_numerator,
                       long max_denominator) {
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(rational(max_abs_numerator, max_denominator));
  }
  return TropVector(std::move(out));
}

TropMatrix Rng::matrix(std::size_t rows, std::size_t cols,
                       long max_abs_numerator, long max_denominator) {
  std::vector<Scalar> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    out.push_back(rational(max_abs_numerator, max_denominator));
  }
  return TropMatrix(rows, cols, std::move(out));
}

}  // namespace tropgeo
