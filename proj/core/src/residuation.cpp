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


#include "tropgeo/residuation.hpp"

#include <string>

#include "tropgeo/error.hpp"

namespace tropgeo {

namespace {

void require_position(const TropVector& x, std::size_t i) {
  if (i >= x.size()) {
    throw DimensionError("position " + std::to_string(i) +
                         " out of range for length " +
                         std::to_string(x.size()));
  }
}

void require_ambient(const Polytope& p, const TropVector& y,
                     std::string_view what) {
  if (p.dimension() != y.size()) {
    throw DimensionError(std::string(what) + ": polytope lives in R^" +
                         std::to_string(p.dimension()) +
                         ", point has length " + std::to_string(y.size()));
  }
}

TropVector max_plus_projection(const TropMatrix& gens, const TropVector& y) {
  std::optional<TropVector> acc;
  for (std::size_t k = 0; k < gens.cols(); ++k) {
    auto v = gens.column(k);
    auto term = scale(bracket(v, y), v);
    acc = acc ? trop_add(Flavor::MaxPlus, *acc, term) : std::move(term);
  }
  return *acc;
}

}  // namespace

Scalar bracket(const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "bracket");
  Scalar best = y[0] - x[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    best = min(best, y[i] - x[i]);
  }
  return best;
}

bool dominates_at(const TropVector& x, const TropVector& y, std::size_t i) {
  require_same_length(x, y, "dominates_at");
  require_position(x, i);
  return bracket(x, y) == y[i] - x[i];
}

std::optional<DominationWitness> domination_witness(const TropVector& x,
                                                    const TropVector& y,
                                                    std::size_t i) {
  if (!dominates_at(x, y, i)) return std::nullopt;
  return DominationWitness{x, i, y[i] - x[i]};
}

bool dominates_polytope_at(const TropVector& x, const Polytope& p,
                           std::size_t i) {
  require_ambient(p, x, "dominates_polytope_at");
  require_position(x, i);
  for (std::size_t k = 0; k < p.generator_count(); ++k) {
    if (!dominates_at(x, p.generator(k), i)) return false;
  }
  return true;
}

TropVector principal_projection(const Polytope& p, const TropVector& y) {
  require_ambient(p, y, "principal_projection");
  if (p.flavor() == Flavor::MaxPlus) {
    return max_plus_projection(p.generators(), y);
  }
  return negate(max_plus_projection(negate(p.generators()), negate(y)));
}

bool member(const Polytope& p, const TropVector& y) {
  return principal_projection(p, y) == y;
}

}  // namespace tropgeo
