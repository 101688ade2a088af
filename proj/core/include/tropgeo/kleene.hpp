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


#ifndef TROPGEO_KLEENE_HPP
#define TROPGEO_KLEENE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tropgeo/polytope.hpp"
#include "tropgeo/residuation.hpp"
#include "tropgeo/semiring.hpp"

namespace tropgeo {

/// Zero diagonal and A (x) A == A under the flavor's product. A must be
/// square (DimensionError otherwise).
bool is_kleene_star(Flavor f, const TropMatrix& a);

/**
 * A square matrix known to be a Kleene star for its flavor. The
 * constructor checks the property and throws PreconditionError if it fails.
 */
class KleeneStar {
 public:
  KleeneStar(Flavor flavor, TropMatrix matrix);

  Flavor flavor() const { return flavor_; }
  const TropMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.rows(); }
  TropVector column(std::size_t i) const { return matrix_.column(i); }

  /// Col of the matrix under its own flavor.
  Polytope column_space() const { return Polytope(flavor_, matrix_); }

  friend bool operator==(const KleeneStar&, const KleeneStar&) = default;

 private:
  Flavor flavor_;
  TropMatrix matrix_;
};

/**
 * The min-plus dominator of a max-plus polytope with generator matrix V.
 *
 * Column i is the greatest lower bound of {u in P : u_i >= 0}. For finitely
 * many generators that infimum is attained by the generators rescaled to
 * have i-th coordinate 0, so D(j,i) = min_k (V(j,k) - V(i,k)), i.e.
 * D = V [x] (-V^T). The result is a max-plus Kleene star whose max-plus
 * column space is the min-plus hull of P.
 *
 * Throws PreconditionError for a min-plus input.
 */
KleeneStar dominator(const Polytope& p);

/// Order dual of dominator() for a min-plus polytope: D'(j,i) =
/// max_k (V(j,k) - V(i,k)), a min-plus Kleene star.
KleeneStar dominator_dual(const Polytope& p);

/// The min-plus convex hull of a max-plus polytope, presented as the
/// max-plus span of the dominator columns.
Polytope min_plus_hull(const Polytope& p);

/// Every dominator column is a member of p.
bool is_min_plus_convex(const Polytope& p);

struct Classification {
  Polytope input;
  KleeneStar dominator;
  bool is_min_plus_convex;
  /// Always equal to is_min_plus_convex for a max-plus polytope.
  bool is_polytrope;
  /// Lowest-indexed dominator column outside the input, if any.
  std::optional<TropVector> witness;
  std::optional<std::size_t> witness_index;
};

/// Decides whether a max-plus polytope is a polytrope (Euclidean convex) via
/// min-plus convexity. When it is, the input is exactly the column space of
/// `dominator`, the only max-plus Kleene star with that column space.
Classification classify(const Polytope& p);

/// A (x) (-r)^T: row space to column space. Unchecked precondition:
/// r lies in Row(A).
TropVector duality_rho(const TropMatrix& a, const TropVector& r);
/// (-c)^T (x) A: column space to row space. Unchecked precondition:
/// c lies in Col(A).
TropVector duality_chi(const TropMatrix& a, const TropVector& c);

/// As above, but throw PreconditionError when the argument is not in the
/// max-plus row (resp. column) space of A.
TropVector duality_rho_checked(const TropMatrix& a, const TropVector& r);
TropVector duality_chi_checked(const TropMatrix& a, const TropVector& c);

/**
 * For a polytope that is both max-plus and min-plus convex: presents it as
 * the min-plus span of the rows of -D (D its min-plus dominator), takes
 * that set's max-plus dominator D', and returns D' == -D^T.
 *
 * Throws PreconditionError when p is not min-plus convex.
 */
bool verify_dominator_relation(const Polytope& p);

/**
 * Midpoint falsifier steered by the classification. For a non-polytrope the
 * rescaled generators whose min-plus sum gives the witness column, and
 * their pairwise max-plus sums, are tried first. For a polytrope this is
 * plain sample_euclidean_midpoints.
 */
MidpointReport guided_midpoint_search(const Polytope& p, std::size_t trials,
                                      std::uint64_t seed,
                                      long max_denominator = 12);

}  // namespace tropgeo

#endif  // TROPGEO_KLEENE_HPP
