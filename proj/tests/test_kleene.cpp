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


#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tropgeo/error.hpp"
#include "tropgeo/kleene.hpp"

namespace tropgeo {
namespace {

using testing::from_oracle;
using testing::to_oracle;

Polytope max_plus(std::initializer_list<TropVector> gens) {
  std::vector<TropVector> v(gens);
  return Polytope(Flavor::MaxPlus, v);
}

const TropMatrix kSegmentDominator{{0, -1, -2}, {0, 0, -1}, {0, 0, 0}};
const TropMatrix kTriangleDominator{{0, 0, 0}, {-2, 0, -1}, {-1, 0, 0}};

Polytope triangle_grid() {
  return max_plus({{1, 0, 0},
                   {0, 0, 0},
                   {Scalar(1, 2), Scalar(-1, 2), 0},
                   {1, -1, 0}});
}

TEST(IsKleeneStar, Examples) {
  EXPECT_FALSE(is_kleene_star(Flavor::MaxPlus, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(is_kleene_star(Flavor::MaxPlus, {{0, -1}, {-1, 0}}));
  EXPECT_TRUE(is_kleene_star(Flavor::MaxPlus, kSegmentDominator));
  EXPECT_FALSE(is_kleene_star(Flavor::MaxPlus, {{1, -1}, {-1, 0}}));
  EXPECT_TRUE(is_kleene_star(Flavor::MinPlus, {{0, 1}, {1, 0}}));
  EXPECT_THROW(is_kleene_star(Flavor::MaxPlus, {{0, 1}}), DimensionError);
}

TEST(KleeneStar, ConstructorValidates) {
  EXPECT_NO_THROW(KleeneStar(Flavor::MaxPlus, {{0, -1}, {-1, 0}}));
  EXPECT_THROW(KleeneStar(Flavor::MaxPlus, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST(Dominator, Examples) {
  EXPECT_EQ(dominator(max_plus({{0, 1, 2}})).matrix(),
            TropMatrix({{0, -1, -2}, {1, 0, -1}, {2, 1, 0}}));
  EXPECT_EQ(dominator(max_plus({{0, 0, 0}, {0, 1, 2}})).matrix(),
            kSegmentDominator);
  EXPECT_EQ(dominator(max_plus({{0, 1}, {1, 0}})).matrix(),
            TropMatrix({{0, -1}, {-1, 0}}));
  EXPECT_EQ(dominator(triangle_grid()).matrix(), kTriangleDominator);
  EXPECT_THROW(dominator(Polytope(Flavor::MinPlus, TropMatrix{{0}})),
               PreconditionError);
}

TEST(Dominator, ExamplesMatchEnumerationOracle) {
  for (const auto& p : {max_plus({{0, 0, 0}, {0, 1, 2}}), triangle_grid()}) {
    std::vector<oracle::Vec> gens;
    oracle::Vec grid;
    for (const auto& c : p.generators().columns()) {
      gens.push_back(to_oracle(c));
      for (const auto& e : c) grid.push_back(-e.value());
    }
    grid.push_back(mpq_class(3));
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      EXPECT_EQ(from_oracle(oracle::glb_of_slice(gens, i, grid)),
                dominator(p).column(i));
    }
  }
}

TEST(Dominator, AgreesWithEnumerationOracleOnRandomInputs) {
  Rng rng(401);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<std::size_t>(rng.integer(1, 3));
    auto m = static_cast<std::size_t>(rng.integer(1, 3));
    Polytope p(Flavor::MaxPlus, rng.matrix(n, m, 6, 2));
    std::vector<oracle::Vec> gens;
    oracle::Vec grid;
    for (const auto& c : p.generators().columns()) {
      gens.push_back(to_oracle(c));
      for (const auto& e : c) grid.push_back(-e.value());
    }
    auto d = dominator(p);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(from_oracle(oracle::glb_of_slice(gens, i, grid)), d.column(i));
    }
  }
}

TEST(DominatorDual, Examples) {
  Polytope one(Flavor::MinPlus, TropMatrix::from_columns(
                                    std::vector<TropVector>{{0, 1, 2}}));
  EXPECT_EQ(dominator_dual(one).matrix(),
            TropMatrix({{0, -1, -2}, {1, 0, -1}, {2, 1, 0}}));

  std::vector<TropVector> swap{{0, 1}, {1, 0}};
  auto d = dominator_dual(Polytope(Flavor::MinPlus, swap));
  EXPECT_EQ(d.matrix(), TropMatrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(d.flavor(), Flavor::MinPlus);

  // Rows of -D for D = [[0,-1],[-1,0]].
  TropMatrix dom{{0, -1}, {-1, 0}};
  auto from_rows = dominator_dual(Polytope(Flavor::MinPlus, negate_transpose(dom)));
  EXPECT_EQ(from_rows.matrix(), negate_transpose(dom));

  EXPECT_THROW(dominator_dual(max_plus({{0, 1}})), PreconditionError);
}

TEST(MinPlusHull, Examples) {
  Polytope star(Flavor::MaxPlus, TropMatrix{{0, -1}, {-1, 0}});
  EXPECT_TRUE(polytope_equal(min_plus_hull(star), star));

  auto seg = max_plus({{0, 0, 0}, {0, 1, 2}});
  auto hull = min_plus_hull(seg);
  EXPECT_EQ(hull.generators(), kSegmentDominator);
  EXPECT_TRUE(member(hull, {-1, 0, 0}));
  EXPECT_FALSE(member(seg, {-1, 0, 0}));

  EXPECT_TRUE(polytope_equal(min_plus_hull(hull), hull));
}

TEST(IsMinPlusConvex, Examples) {
  EXPECT_TRUE(is_min_plus_convex(Polytope(Flavor::MaxPlus, kSegmentDominator)));
  EXPECT_FALSE(is_min_plus_convex(max_plus({{0, 0, 0}, {0, 1, 2}})));
  EXPECT_FALSE(is_min_plus_convex(triangle_grid()));
}

TEST(Classify, Examples) {
  auto swap = classify(max_plus({{0, 1}, {1, 0}}));
  EXPECT_TRUE(swap.is_polytrope);
  EXPECT_TRUE(swap.is_min_plus_convex);
  EXPECT_FALSE(swap.witness.has_value());
  EXPECT_EQ(swap.dominator.matrix(), TropMatrix({{0, -1}, {-1, 0}}));

  auto seg = classify(max_plus({{0, 0, 0}, {0, 1, 2}}));
  EXPECT_FALSE(seg.is_polytrope);
  ASSERT_TRUE(seg.witness.has_value());
  EXPECT_EQ(*seg.witness, TropVector({-1, 0, 0}));
  EXPECT_EQ(seg.witness_index, 1u);

  auto tri = classify(triangle_grid());
  EXPECT_FALSE(tri.is_polytrope);
  EXPECT_EQ(*tri.witness, TropVector({0, -1, 0}));
  EXPECT_EQ(tri.witness_index, 2u);
}

TEST(Classify, DominatorColumnSpaceIsFixedPoint) {
  Rng rng(402);
  for (int trial = 0; trial < 150; ++trial) {
    auto d = testing::random_kleene_star(rng);
    auto c = classify(d.column_space());
    EXPECT_TRUE(c.is_polytrope);
    EXPECT_EQ(c.dominator, d);
  }
}

TEST(Classify, WitnessIsOutsideAndInHull) {
  Rng rng(403);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = testing::random_polytope(rng);
    auto c = classify(p);
    EXPECT_EQ(c.is_polytrope, c.is_min_plus_convex);
    EXPECT_EQ(c.is_min_plus_convex, polytope_equal(p, min_plus_hull(p)));
    if (c.witness) {
      EXPECT_FALSE(member(p, *c.witness));
      EXPECT_TRUE(member(min_plus_hull(p), *c.witness));
      for (std::size_t i = 0; i < *c.witness_index; ++i) {
        EXPECT_TRUE(member(p, c.dominator.column(i)));
      }
    }
  }
}

TEST(Dominator, InvariantUnderPresentation) {
  Rng rng(404);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = testing::random_polytope(rng);
    auto d = dominator(p).matrix();
    auto cols = p.generators().columns();

    auto rescaled = cols;
    for (auto& c : rescaled) c = scale(rng.rational(20, 10), c);
    EXPECT_EQ(dominator(Polytope(Flavor::MaxPlus, rescaled)).matrix(), d);

    auto permuted = cols;
    std::rotate(permuted.begin(), permuted.begin() + rng.below(cols.size()),
                permuted.end());
    EXPECT_EQ(dominator(Polytope(Flavor::MaxPlus, permuted)).matrix(), d);

    auto extended = cols;
    extended.push_back(random_member(p, rng));
    EXPECT_EQ(dominator(Polytope(Flavor::MaxPlus, extended)).matrix(), d);
  }
}

TEST(Dominator, CanonicalRepresentationOfHullMembers) {
  Rng rng(405);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = testing::random_polytope(rng);
    auto d = dominator(p);
    auto hull = min_plus_hull(p);
    auto x = random_member(hull, rng);
    std::optional<TropVector> rebuilt;
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto col = d.column(i);
      EXPECT_EQ(bracket(col, x), x[i]);
      auto term = scale(bracket(col, x), col);
      rebuilt = rebuilt ? trop_add(Flavor::MaxPlus, *rebuilt, term) : term;
    }
    EXPECT_EQ(*rebuilt, x);
  }
}

TEST(KleeneStar, ColumnSpaceIsIntersectionOfDominationSets) {
  Rng rng(406);
  int inside = 0;
  for (int trial = 0; trial < 200; ++trial) {
    testing::CorpusBounds b;
    b.max_dimension = 4;
    auto k = testing::random_kleene_star(rng, b);
    auto col = k.column_space();
    auto y = rng.coin() ? random_member(col, rng)
                        : rng.vector(k.size(), 20, 10);
    bool dominated = true;
    for (std::size_t i = 0; i < k.size(); ++i) {
      dominated = dominated && dominates_at(k.column(i), y, i);
    }
    EXPECT_EQ(member(col, y), dominated);
    inside += dominated;
  }
  EXPECT_GT(inside, 50);
}

TEST(Duality, Examples) {
  TropMatrix swap{{0, 1}, {1, 0}};
  EXPECT_EQ(duality_rho(swap, {0, 1}), TropVector({0, 1}));

  TropMatrix star{{0, -1}, {-1, 0}};
  EXPECT_EQ(duality_chi(star, {0, -1}), TropVector({0, 1}));
  // Rows of a Kleene star map to their negation.
  EXPECT_EQ(duality_rho(star, star.row(0)), negate(star.row(0)));

  EXPECT_EQ(duality_chi(swap, duality_rho(swap, {0, 1})), TropVector({0, 1}));
  EXPECT_EQ(duality_rho(star, duality_chi(star, {0, -1})), TropVector({0, -1}));

  EXPECT_THROW(duality_rho(swap, {0, 1, 2}), DimensionError);
  EXPECT_THROW(duality_chi(swap, {0}), DimensionError);
}

TEST(Duality, CheckedVariantsRejectNonMembers) {
  TropMatrix seg{{0, 0}, {0, 1}, {0, 2}};
  EXPECT_THROW(duality_chi_checked(seg, {-1, 0, 0}), PreconditionError);
  EXPECT_NO_THROW(duality_chi_checked(seg, {0, 1, 2}));
  EXPECT_THROW(duality_rho_checked(seg, {1, 0}), PreconditionError);
  EXPECT_NO_THROW(duality_rho_checked(seg, {0, 1}));
  EXPECT_THROW(duality_chi_checked(seg, {0, 1}), DimensionError);
}

TEST(VerifyDominatorRelation, Examples) {
  EXPECT_TRUE(verify_dominator_relation(max_plus({{0, 1, 2}})));
  EXPECT_TRUE(verify_dominator_relation(max_plus({{0, 1}, {1, 0}})));
  EXPECT_THROW(verify_dominator_relation(max_plus({{0, 0, 0}, {0, 1, 2}})),
               PreconditionError);
}

TEST(GuidedMidpointSearch, FindsSegmentAndTriangleCertificates) {
  auto seg = guided_midpoint_search(max_plus({{0, 0, 0}, {0, 1, 2}}), 20, 1);
  EXPECT_FALSE(seg.violations.empty());
  auto tri = guided_midpoint_search(triangle_grid(), 200, 1);
  EXPECT_FALSE(tri.violations.empty());
  auto star = guided_midpoint_search(
      Polytope(Flavor::MaxPlus, kTriangleDominator), 200, 1);
  EXPECT_TRUE(star.violations.empty());
}

}  // namespace
}  // namespace tropgeo
