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


#include "tropgeo/kleene.hpp"

#include <string>

#include "tropgeo/error.hpp"

namespace tropgeo {

namespace {

void require_flavor(const Polytope& p, Flavor expected, std::string_view what) {
  if (p.flavor() != expected) {
    throw PreconditionError(std::string(what) + " requires a " +
                            std::string(to_string(expected)) +
                            " polytope, got " +
                            std::string(to_string(p.flavor())));
  }
}

}  // namespace

bool is_kleene_star(Flavor f, const TropMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("is_kleene_star: matrix is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != Scalar(0)) return false;
  }
  return trop_mat_mul(f, a, a) == a;
}

KleeneStar::KleeneStar(Flavor flavor, TropMatrix matrix)
    : flavor_(flavor), matrix_(std::move(matrix)) {
  if (!is_kleene_star(flavor_, matrix_)) {
    throw PreconditionError("matrix " + matrix_.str() + " is not a " +
                            std::string(to_string(flavor_)) + " Kleene star");
  }
}

KleeneStar dominator(const Polytope& p) {
  require_flavor(p, Flavor::MaxPlus, "dominator");
  const auto& v = p.generators();
  return KleeneStar(Flavor::MaxPlus,
                    trop_mat_mul(Flavor::MinPlus, v, negate_transpose(v)));
}

KleeneStar dominator_dual(const Polytope& p) {
  require_flavor(p, Flavor::MinPlus, "dominator_dual");
  const auto& v = p.generators();
  return KleeneStar(Flavor::MinPlus,
                    trop_mat_mul(Flavor::MaxPlus, v, negate_transpose(v)));
}

Polytope min_plus_hull(const Polytope& p) {
  return dominator(p).column_space();
}

bool is_min_plus_convex(const Polytope& p) {
  return !classify(p).witness.has_value();
}

Classification classify(const Polytope& p) {
  auto d = dominator(p);
  std::optional<TropVector> witness;
  std::optional<std::size_t> witness_index;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto column = d.column(i);
    if (!member(p, column)) {
      witness = std::move(column);
      witness_index = i;
      break;
    }
  }
  const bool convex = !witness.has_value();
  return Classification{p,      std::move(d), convex, convex,
                        std::move(witness), witness_index};
}

TropVector duality_rho(const TropMatrix& a, const TropVector& r) {
  return trop_mat_vec(Flavor::MaxPlus, a, negate(r));
}

TropVector duality_chi(const TropMatrix& a, const TropVector& c) {
  return trop_vec_mat(Flavor::MaxPlus, negate(c), a);
}

TropVector duality_rho_checked(const TropMatrix& a, const TropVector& r) {
  if (r.size() != a.cols()) {
    throw DimensionError("duality_rho: row vector length " +
                         std::to_string(r.size()) + " but matrix has " +
                         std::to_string(a.cols()) + " columns");
  }
  if (!member(Polytope(Flavor::MaxPlus, a.transpose()), r)) {
    throw PreconditionError("duality_rho: " + r.str() +
                            " is not in the max-plus row space");
  }
  return duality_rho(a, r);
}

TropVector duality_chi_checked(const TropMatrix& a, const TropVector& c) {
  if (c.size() != a.rows()) {
    throw DimensionError("duality_chi: column vector length " +
                         std::to_string(c.size()) + " but matrix has " +
                         std::to_string(a.rows()) + " rows");
  }
  if (!member(Polytope(Flavor::MaxPlus, a), c)) {
    throw PreconditionError("duality_chi: " + c.str() +
                            " is not in the max-plus column space");
  }
  return duality_chi(a, c);
}

bool verify_dominator_relation(const Polytope& p) {
  auto c = classify(p);
  if (!c.is_min_plus_convex) {
    throw PreconditionError(
        "verify_dominator_relation: polytope is not min-plus convex (" +
        c.witness->str() + " is in its min-plus hull but not in it)");
  }
  const auto& d = c.dominator.matrix();
  // Rows of -D are the columns of -D^T.
  Polytope as_min_plus(Flavor::MinPlus, negate_transpose(d));
  return dominator_dual(as_min_plus).matrix() == negate_transpose(d);
}

MidpointReport guided_midpoint_search(const Polytope& p, std::size_t trials,
                                      std::uint64_t seed,
                                      long max_denominator) {
  SamplerOptions options;
  options.max_denominator = max_denominator;
  if (p.flavor() == Flavor::MaxPlus) {
    auto c = classify(p);
    if (c.witness_index) {
      const std::size_t i = *c.witness_index;
      const auto& v = p.generators();
      std::vector<TropVector> rescaled;
      for (std::size_t k = 0; k < v.cols(); ++k) {
        rescaled.push_back(scale(-v(i, k), v.column(k)));
      }
      options.guide_points = rescaled;
      for (std::size_t a = 0; a < rescaled.size(); ++a) {
        for (std::size_t b = a + 1; b < rescaled.size(); ++b) {
          options.guide_points.push_back(
              trop_add(Flavor::MaxPlus, rescaled[a], rescaled[b]));
        }
      }
      options.guide_points.push_back(principal_projection(p, *c.witness));
    }
  }
  return sample_euclidean_midpoints(p, trials, seed, options);
}

}  // namespace tropgeo
