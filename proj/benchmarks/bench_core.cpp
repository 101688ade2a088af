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


#include <benchmark/benchmark.h>

#include "tropgeo/kleene.hpp"
#include "tropgeo/polytope.hpp"
#include "tropgeo/random.hpp"
#include "tropgeo/residuation.hpp"

namespace {

using namespace tropgeo;

// Square generator matrix with n rows and n columns.
Polytope square_polytope(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return Polytope(Flavor::MaxPlus, rng.matrix(n, n, 20, 10));
}

void BM_MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  auto a = rng.matrix(n, n, 20, 10), b = rng.matrix(n, n, 20, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trop_mat_mul(Flavor::MaxPlus, a, b));
  }
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(2, 32);

void BM_Member(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto p = square_polytope(n, 2);
  Rng rng(3);
  auto y = rng.vector(n, 20, 10);
  for (auto _ : state) benchmark::DoNotOptimize(member(p, y));
}
BENCHMARK(BM_Member)->RangeMultiplier(2)->Range(2, 32);

void BM_Dominator(benchmark::State& state) {
  auto p = square_polytope(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(dominator(p));
}
BENCHMARK(BM_Dominator)->RangeMultiplier(2)->Range(2, 32);

void BM_Classify(benchmark::State& state) {
  auto p = square_polytope(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(2, 16);

void BM_GuidedSearch(benchmark::State& state) {
  std::vector<TropVector> gens{{0, 0, 0}, {0, 1, 2}};
  Polytope seg(Flavor::MaxPlus, gens);
  for (auto _ : state) {
    benchmark::DoNotOptimize(guided_midpoint_search(seg, 200, 7));
  }
}
BENCHMARK(BM_GuidedSearch);

}  // namespace

BENCHMARK_MAIN();
