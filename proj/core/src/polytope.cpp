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


#include "tropgeo/polytope.hpp"

#include <algorithm>
#include <optional>

#include "tropgeo/error.hpp"

namespace tropgeo {

namespace {

// Largest minus smallest generator coordinate, plus one.
Scalar generator_spread(const Polytope& p) {
  const auto entries = p.generators().entries();
  auto [lo, hi] = std::minmax_element(entries.begin(), entries.end());
  return *hi - *lo + Scalar(1);
}

void remember(std::vector<TropVector>& seen, const TropVector& v) {
  if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
}

}  // namespace

ProjectivePoint projectivise(const TropVector& x) {
  if (x.size() < 2) {
    throw DimensionError("projectivise needs length >= 2, got " +
                         std::to_string(x.size()));
  }
  std::vector<Scalar> out;
  out.reserve(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) out.push_back(x[i] - x[0]);
  return ProjectivePoint{TropVector(std::move(out))};
}

Polytope reduce_generators(const Polytope& p) {
  std::vector<TropVector> kept = p.generators().columns();
  for (std::size_t k = kept.size(); k-- > 0;) {
    if (kept.size() == 1) break;
    std::vector<TropVector> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != k) others.push_back(kept[j]);
    }
    if (member(Polytope(p.flavor(), others), kept[k])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return Polytope(p.flavor(), kept);
}

bool polytope_equal(const Polytope& p, const Polytope& q) {
  if (p.flavor() != q.flavor()) {
    throw PreconditionError("polytope_equal: flavors differ (" +
                            std::string(to_string(p.flavor())) + " vs " +
                            std::string(to_string(q.flavor())) + ")");
  }
  if (p.dimension() != q.dimension()) {
    throw DimensionError("polytope_equal: ambient dimensions " +
                         std::to_string(p.dimension()) + " and " +
                         std::to_string(q.dimension()));
  }
  for (std::size_t k = 0; k < p.generator_count(); ++k) {
    if (!member(q, p.generator(k))) return false;
  }
  for (std::size_t k = 0; k < q.generator_count(); ++k) {
    if (!member(p, q.generator(k))) return false;
  }
  return true;
}

TropVector affine_combination(const Scalar& t, const TropVector& u,
                              const TropVector& v) {
  require_same_length(u, v, "affine_combination");
  const Scalar s = Scalar(1) - t;
  std::vector<Scalar> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(t * u[i] + s * v[i]);
  return TropVector(std::move(out));
}

TropVector random_member(const Polytope& p, Rng& rng, long max_denominator) {
  const Scalar spread = generator_spread(p);
  const std::size_t m = p.generator_count();
  const auto count = static_cast<std::size_t>(rng.integer(1, static_cast<long>(m)));

  // Partial Fisher-Yates for a random subset of `count` generators.
  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < m; ++k) order[k] = k;
  std::optional<TropVector> acc;
  for (std::size_t s = 0; s < count; ++s) {
    auto pick = s + rng.below(m - s);
    std::swap(order[s], order[pick]);
    auto term = scale(rng.rational_in(-spread, spread, max_denominator),
                      p.generator(order[s]));
    acc = acc ? trop_add(p.flavor(), *acc, term) : std::move(term);
  }
  return *acc;
}

MidpointReport sample_euclidean_midpoints(const Polytope& p,
                                          std::size_t trials,
                                          std::uint64_t seed,
                                          const SamplerOptions& options) {
  if (trials == 0) throw PreconditionError("trials must be >= 1");
  Rng rng(seed);
  MidpointReport report;

  auto test = [&](const Scalar& t, const TropVector& u, const TropVector& v) {
    auto z = affine_combination(t, u, v);
    if (!member(p, z)) remember(report.violations, z);
    ++report.trials;
  };

  std::vector<TropVector> guides;
  for (const auto& g : options.guide_points) {
    if (g.size() == p.dimension() && member(p, g)) remember(guides, g);
  }
  // Guided phase: every pair at t = 1/2, then again at a random t.
  for (int pass = 0; pass < 2 && report.trials < trials; ++pass) {
    for (std::size_t a = 0; a < guides.size() && report.trials < trials; ++a) {
      for (std::size_t b = a + 1; b < guides.size() && report.trials < trials;
           ++b) {
        Scalar t = pass == 0 ? Scalar(1, 2) : rng.open_unit(options.max_denominator);
        test(t, guides[a], guides[b]);
      }
    }
  }

  while (report.trials < trials) {
    auto u = random_member(p, rng, options.max_denominator);
    // Mix in guide points so the random phase still explores near them.
    auto v = (!guides.empty() && rng.coin())
                 ? guides[rng.below(guides.size())]
                 : random_member(p, rng, options.max_denominator);
    test(rng.open_unit(options.max_denominator), u, v);
  }
  return report;
}

}  // namespace tropgeo
