// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "cmpl/errors.hpp"
#include "cmpl/oracle.hpp"
#include "cmpl/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cmpl;
using namespace cmpl::testing;

namespace {

// Modular function with chosen singleton values.
SetFunctionPtr valued_singletons(int n, std::vector<double> values) {
  std::vector<InteractionTerm> terms;
  for (int i = 0; i < n; ++i) terms.push_back({mask(n, {i}), values[i]});
  return make_interaction(n, 1, terms);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("compare on cov3") {
  ComparisonOracle o(cov3());
  CHECK(o.compare(mask(3, {0}), mask(3, {2})));
  CHECK_FALSE(o.compare(mask(3, {2}), mask(3, {0})));
  for (std::uint64_t b = 0; b < 8; ++b) CHECK(o.compare(bits(3, b), bits(3, b)));
  CHECK(o.query_count() == 10);
  CHECK_THROWS_AS(o.compare(SubsetMask(4), SubsetMask(3)), InputError);
}

TEST_CASE("compare treats near-equal values as equal") {
  auto f = valued_singletons(2, {1.0, 1.0 + 1e-12});
  ComparisonOracle o(f);
  CHECK(o.compare(mask(2, {1}), mask(2, {0})));
  CHECK(o.compare(mask(2, {0}), mask(2, {1})));
}

TEST_CASE("oracle_sort on cov3") {
  ComparisonOracle o(cov3());
  const std::vector<SubsetMask> sets = {mask(3, {2}), mask(3, {0}), mask(3, {0, 1})};
  const auto order = oracle_sort(o, sets);
  CHECK(order == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("oracle_sort trivial inputs") {
  ComparisonOracle o(cov3());
  const std::vector<SubsetMask> one = {mask(3, {1})};
  CHECK(oracle_sort(o, one) == std::vector<std::size_t>{0});
  // All of these cover the whole universe: value 3.
  const std::vector<SubsetMask> equal = {mask(3, {2}), mask(3, {0, 2}), mask(3, {1, 2}),
                                         SubsetMask::full(3)};
  CHECK(oracle_sort(o, equal) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("oracle_sort is sorted, stable and within the query budget") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 10;
    auto f = gen_coverage(n, 6, 0.3, 100 + trial);  // small universe: many ties
    ComparisonOracle o(f);
    const std::size_t m = 1 + rng.below(64);
    std::vector<SubsetMask> sets;
    for (std::size_t k = 0; k < m; ++k) sets.push_back(ProductDistribution{n, 0.5}.draw(rng));
    const auto order = oracle_sort(o, sets);
    const double budget = m * std::ceil(std::log2(static_cast<double>(m))) + m;
    CHECK(static_cast<double>(o.query_count()) <= budget);

    std::vector<std::size_t> expect(m);
    for (std::size_t k = 0; k < m; ++k) expect[k] = k;
    std::stable_sort(expect.begin(), expect.end(), [&](std::size_t a, std::size_t b) {
      return f->eval(sets[a]) < f->eval(sets[b]);
    });
    CHECK(order == expect);
    for (std::size_t k = 1; k < m; ++k) {
      CHECK(o.compare(sets[order[k - 1]], sets[order[k]]));
      CHECK(f->eval(sets[order[k - 1]]) <= f->eval(sets[order[k]]));
    }
  }
}

TEST_CASE("locate examples") {
  auto f = valued_singletons(4, {1.0, 2.0, 3.0, 2.5});
  ComparisonOracle o(f);
  const std::vector<SubsetMask> lm = {mask(4, {0}), mask(4, {1}), mask(4, {2})};
  const Location mid = locate(o, mask(4, {3}), lm);
  CHECK(mid.interval == 2);
  CHECK_FALSE(mid.ties_lower);
  const Location below = locate(o, SubsetMask(4), lm);
  CHECK(below.interval == 0);
  CHECK_FALSE(below.ties_lower);
  const Location tie = locate(o, mask(4, {1}), lm);
  CHECK(tie.interval == 2);
  CHECK(tie.ties_lower);
  const Location above = locate(o, mask(4, {2, 3}), lm);
  CHECK(above.interval == 3);
}

TEST_CASE("locate agrees with comparing against every landmark") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 10;
    auto f = gen_coverage(n, 8, 0.25, 500 + trial);
    ComparisonOracle o(f);
    const std::size_t m = 1 + rng.below(64);
    std::vector<SubsetMask> raw;
    for (std::size_t k = 0; k < m; ++k) raw.push_back(ProductDistribution{n, 0.5}.draw(rng));
    const auto order = oracle_sort(o, raw);
    std::vector<SubsetMask> lm;
    for (auto k : order) lm.push_back(raw[k]);
    for (int q = 0; q < 100; ++q) {
      const SubsetMask s = ProductDistribution{n, 0.5}.draw(rng);
      const std::uint64_t before = o.query_count();
      const Location loc = locate(o, s, lm);
      int count = 0;
      for (const auto& l : lm) count += f->eval(l) <= f->eval(s) ? 1 : 0;
      CHECK(loc.interval == count);
      CHECK(loc.ties_lower == (count > 0 && f->eval(lm[count - 1]) == f->eval(s)));
#ifdef NDEBUG
      CHECK(o.query_count() - before <= static_cast<std::uint64_t>(std::ceil(std::log2(m + 1.0))) + 1);
#endif
      (void)before;
    }
  }
}

TEST_CASE("landmark tie groups") {
  auto f = valued_singletons(5, {1.0, 1.0, 2.0, 3.0, 3.0});
  ComparisonOracle o(f);
  std::vector<SubsetMask> lm;
  for (int i = 0; i < 5; ++i) lm.push_back(mask(5, {i}));
  CHECK(landmark_tie_groups(o, lm) == std::vector<int>{0, 0, 1, 2, 2});
}

}  // TEST_SUITE
