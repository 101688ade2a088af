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


#ifndef TROPGEO_TESTS_FIXTURES_HPP
#define TROPGEO_TESTS_FIXTURES_HPP

#include <cstddef>
#include <vector>

#include "oracles.hpp"
#include "tropgeo/kleene.hpp"
#include "tropgeo/random.hpp"
#include "tropgeo/semiring.hpp"

namespace tropgeo::testing {

/// Shape of the random polytope corpus used across the suites.
struct CorpusBounds {
  std::size_t max_dimension = 6;
  std::size_t max_generators = 8;
  long max_abs_numerator = 20;
  long max_denominator = 10;
  std::size_t min_dimension = 1;
};

inline Polytope random_polytope(Rng& rng, const CorpusBounds& b = {},
                                Flavor f = Flavor::MaxPlus) {
  auto n = static_cast<std::size_t>(rng.integer(
      static_cast<long>(b.min_dimension), static_cast<long>(b.max_dimension)));
  auto m = static_cast<std::size_t>(
      rng.integer(1, static_cast<long>(b.max_generators)));
  return Polytope(f, rng.matrix(n, m, b.max_abs_numerator, b.max_denominator));
}

/// A max-plus Kleene star obtained as the dominator of a random polytope.
inline KleeneStar random_kleene_star(Rng& rng, const CorpusBounds& b = {}) {
  return dominator(random_polytope(rng, b));
}

inline oracle::Vec to_oracle(const TropVector& v) {
  oracle::Vec out;
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

inline oracle::Mat to_oracle(const TropMatrix& m) {
  oracle::Mat out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_oracle(m.row(i)));
  return out;
}

inline TropMatrix from_oracle(const oracle::Mat& m) {
  std::vector<Scalar> entries;
  for (const auto& row : m) {
    for (const auto& e : row) entries.emplace_back(e);
  }
  return TropMatrix(m.size(), m.front().size(), std::move(entries));
}

inline TropVector from_oracle(const oracle::Vec& v) {
  std::vector<Scalar> entries;
  for (const auto& e : v) entries.emplace_back(e);
  return TropVector(std::move(entries));
}

}  // namespace tropgeo::testing

#endif  // TROPGEO_TESTS_FIXTURES_HPP
