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


#ifndef TROPGEO_POLYTOPE_HPP
#define TROPGEO_POLYTOPE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropgeo/random.hpp"
#include "tropgeo/residuation.hpp"
#include "tropgeo/semiring.hpp"

namespace tropgeo {

/// The representative of a scaling orbit with first coordinate 0, stored
/// without that coordinate: a point of R^(n-1).
struct ProjectivePoint {
  TropVector coords;

  friend bool operator==(const ProjectivePoint&,
                         const ProjectivePoint&) = default;
};

/// (x_2 - x_1, ..., x_n - x_1). Requires n >= 2.
ProjectivePoint projectivise(const TropVector& x);

/**
 * Drops generators that lie in the span of the others until none is
 * redundant. Generators are examined from the highest index down, each
 * against everything still present, so among mutually redundant generators
 * the earliest-indexed one survives. Retained generators keep their order.
 */
Polytope reduce_generators(const Polytope& p);

/// Mutual membership of generators. Throws on flavor or dimension mismatch.
bool polytope_equal(const Polytope& p, const Polytope& q);

struct SamplerOptions {
  /// Bound on denominators of sampled scalings and segment parameters.
  long max_denominator = 12;
  /// Extra members of p to pair up before uniform sampling starts. Points
  /// that are not members are ignored.
  std::vector<TropVector> guide_points;
};

struct MidpointReport {
  std::size_t trials = 0;
  /// Distinct points t*u + (1-t)*v, u and v in p, that are not in p.
  std::vector<TropVector> violations;
};

/// A random element of p: a flavor-sum of randomly scaled generators from a
/// random non-empty subset.
TropVector random_member(const Polytope& p, Rng& rng,
                         long max_denominator = 12);

/**
 * Euclidean convexity falsifier. Each trial picks two members u, v and a
 * rational t in (0,1) and tests t*u + (1-t)*v for membership. Violations
 * certify that p is not Euclidean convex; an empty list is only evidence.
 *
 * When guide points are given, the first trials walk through all pairs of
 * guide points (t = 1/2 first, then random t) before uniform sampling.
 */
MidpointReport sample_euclidean_midpoints(const Polytope& p,
                                          std::size_t trials,
                                          std::uint64_t seed,
                                          const SamplerOptions& options = {});

/// t*u + (1-t)*v, exactly.
TropVector affine_combination(const Scalar& t, const TropVector& u,
                              const TropVector& v);

}  // namespace tropgeo

#endif  // TROPGEO_POLYTOPE_HPP
