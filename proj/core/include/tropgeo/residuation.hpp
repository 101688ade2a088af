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


#ifndef TROPGEO_RESIDUATION_HPP
#define TROPGEO_RESIDUATION_HPP

#include <cstddef>
#include <optional>
#include <span>

#include "tropgeo/scalar.hpp"
#include "tropgeo/semiring.hpp"

namespace tropgeo {

/**
 * A finitely generated tropical polytope: the max-plus (or min-plus) span of
 * the columns of a generator matrix, closed under tropical scaling.
 *
 * Two Polytope values describe the same set iff polytope_equal() says so;
 * operator== is not provided on purpose since presentations differ.
 */
class Polytope {
 public:
  Polytope(Flavor flavor, TropMatrix generators)
      : flavor_(flavor), generators_(std::move(generators)) {}
  Polytope(Flavor flavor, std::span<const TropVector> generators)
      : flavor_(flavor), generators_(TropMatrix::from_columns(generators)) {}

  Flavor flavor() const { return flavor_; }
  const TropMatrix& generators() const { return generators_; }
  std::size_t dimension() const { return generators_.rows(); }
  std::size_t generator_count() const { return generators_.cols(); }
  TropVector generator(std::size_t k) const { return generators_.column(k); }

 private:
  Flavor flavor_;
  TropMatrix generators_;
};

/// Records that dominator_point dominates some y in the given position, with
/// bracket_value = <dominator_point | y> = y_position - dominator_point_position.
struct DominationWitness {
  TropVector dominator_point;
  std::size_t position;
  Scalar bracket_value;
};

/// <x|y> = min_i (y_i - x_i): the largest lambda with lambda (x) x <= y.
Scalar bracket(const TropVector& x, const TropVector& y);

/// x dominates y in position i: <x|y> = y_i - x_i. `i` is 0-based.
bool dominates_at(const TropVector& x, const TropVector& y, std::size_t i);

/// Witness form of dominates_at; empty when x does not dominate y at i.
std::optional<DominationWitness> domination_witness(const TropVector& x,
                                                    const TropVector& y,
                                                    std::size_t i);

/// x dominates every generator of p in position i, hence (domination sets
/// being max-plus, min-plus and Euclidean convex) all of p.
bool dominates_polytope_at(const TropVector& x, const Polytope& p,
                           std::size_t i);

/**
 * The principal solution of y against the generators of p.
 *
 * MaxPlus: (+)_k <v_k|y> (x) v_k, the greatest member of p below y.
 * MinPlus: computed by order duality (negate everything, project in
 * max-plus, negate back), which gives the least member of p above y.
 */
TropVector principal_projection(const Polytope& p, const TropVector& y);

/// y lies in the span of p, decided by principal_projection(p, y) == y.
bool member(const Polytope& p, const TropVector& y);

}  // namespace tropgeo

#endif  // TROPGEO_RESIDUATION_HPP
