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

#include <set>

#include "cmpl/errors.hpp"
#include "cmpl/setfn.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cmpl;
using namespace cmpl::testing;

namespace {

double union_weight(const CoverageParams& p, const SubsetMask& s) {
  std::set<int> covered;
  for (int i : s.elements()) covered.insert(p.item_sets[i].begin(), p.item_sets[i].end());
  double w = 0.0;
  for (int u : covered) w += p.weights[u];
  return w;
}

}  // namespace

TEST_SUITE("setfn") {

TEST_CASE("cov3 table") {
  auto f = cov3();
  for (std::uint64_t b = 0; b < 8; ++b) CHECK(f->eval(bits(3, b)) == cov3_table()[b]);
  CHECK(f->eval(mask(3, {2})) == 3.0);
  CHECK(f->eval(SubsetMask(3)) == 0.0);
}

TEST_CASE("eval rejects a wider mask") {
  CHECK_THROWS_AS(cov3()->eval(SubsetMask(4)), InputError);
}

TEST_CASE("path cut and its fourier form") {
  auto cut = make_path_graph_cut(3);
  CHECK(cut->eval(mask(3, {1})) == 2.0);
  CHECK(cut->eval(mask(3, {0})) == 1.0);
  CHECK(cut->eval(SubsetMask::full(3)) == 0.0);

  auto four = make_fourier(3, {SubsetMask(3), mask(3, {0, 1}), mask(3, {1, 2})}, {1.0, -0.5, -0.5});
  CHECK(four->eval(mask(3, {1})) == 2.0);
  for (std::uint64_t b = 0; b < 8; ++b) CHECK(four->eval(bits(3, b)) == cut->eval(bits(3, b)));
}

TEST_CASE("cut fourier expansion matches direct counting") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto cut = gen_graph_cut(10, 0.4, seed % 2 == 0, seed);
    auto four = cut_to_fourier(*cut);
    const auto& support = std::get<FourierParams>(four->params()).support;
    for (const auto& t : support) CHECK((t.cardinality() == 0 || t.cardinality() == 2));
    for (std::uint64_t b = 0; b < 1024; ++b) {
      REQUIRE(four->eval(bits(10, b)) == doctest::Approx(cut->eval(bits(10, b))).epsilon(1e-12));
    }
  }
}

TEST_CASE("single-element universe coverage") {
  auto f = gen_coverage(3, 1, 1.0, 11);
  const double w = std::get<CoverageParams>(f->params()).weights[0];
  CHECK(w > 0.0);
  CHECK(w <= 1.0);
  CHECK(f->eval(SubsetMask(3)) == 0.0);
  for (std::uint64_t b = 1; b < 8; ++b) CHECK(f->eval(bits(3, b)) == w);
}

TEST_CASE("generated coverage agrees with an independent union count") {
  auto f = gen_coverage(8, 30, 0.2, 3);
  const auto& p = std::get<CoverageParams>(f->params());
  for (std::uint64_t b = 0; b < 256; ++b) {
    CHECK(f->eval(bits(8, b)) == doctest::Approx(union_weight(p, bits(8, b))).epsilon(1e-12));
  }
}

TEST_CASE("generated coverage is monotone and submodular") {
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    auto f = gen_coverage(12, 40, 0.2, seed);
    CHECK(verify_class(*f, SetProperty::kMonotone).pass);
    CHECK(verify_class(*f, SetProperty::kSubmodular).pass);
  }
  CHECK(verify_class(*cov3(), SetProperty::kSubmodular).pass);
}

TEST_CASE("coverage generation is seeded") {
  auto a = gen_coverage(10, 20, 0.3, 5);
  auto b = gen_coverage(10, 20, 0.3, 5);
  auto c = gen_coverage(10, 20, 0.3, 6);
  bool differs = false;
  for (std::uint64_t x = 0; x < 1024; ++x) {
    CHECK(a->eval(bits(10, x)) == b->eval(bits(10, x)));
    differs |= a->eval(bits(10, x)) != c->eval(bits(10, x));
  }
  CHECK(differs);
}

TEST_CASE("coverage rejects density outside (0, 1]") {
  CHECK_THROWS_AS(gen_coverage(4, 5, 0.0, 1), InputError);
  CHECK_THROWS_AS(gen_coverage(4, 5, 1.5, 1), InputError);
}

TEST_CASE("curvature shift") {
  auto base = cov3();
  auto k0 = gen_curvature_shift(base, 0.0);
  auto k1 = gen_curvature_shift(base, 1.0);
  auto kh = gen_curvature_shift(base, 0.5);
  for (std::uint64_t b = 0; b < 8; ++b) {
    CHECK(k0->eval(bits(3, b)) == static_cast<double>(std::popcount(b)));
    CHECK(k1->eval(bits(3, b)) == base->eval(bits(3, b)));
  }
  CHECK(kh->eval(mask(3, {2})) == 2.0);
  CHECK_THROWS_AS(gen_curvature_shift(base, 1.5), InputError);
  CHECK_THROWS_AS(gen_curvature_shift(base, -0.1), InputError);
}

TEST_CASE("squared cardinality fails subadditivity with a singleton witness") {
  std::vector<double> table(8);
  for (std::uint64_t b = 0; b < 8; ++b) table[b] = std::popcount(b) * std::popcount(b);
  auto f = fourier_from_table(3, table);
  for (std::uint64_t b = 0; b < 8; ++b) REQUIRE(f->eval(bits(3, b)) == doctest::Approx(table[b]));
  const VerifyResult r = verify_class(*f, SetProperty::kSubadditive);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.size() == 2);
  CHECK(r.witness[0] == mask(3, {0}));
  CHECK(r.witness[1] == mask(3, {1}));
}

TEST_CASE("cardinality is monotone") {
  auto f = gen_curvature_shift(cov3(), 0.0);
  CHECK(verify_class(*f, SetProperty::kMonotone).pass);
}

TEST_CASE("a non-monotone cut reports a witness") {
  const VerifyResult r = verify_class(*make_path_graph_cut(3), SetProperty::kMonotone);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.size() == 2);
  const SubsetMask grown = r.witness[0] | r.witness[1];
  CHECK(make_path_graph_cut(3)->eval(grown) < make_path_graph_cut(3)->eval(r.witness[0]));
}

TEST_CASE("exhaustive verification refuses large n unless sampled") {
  auto f = gen_coverage(16, 20, 0.2, 1);
  CHECK_THROWS_AS(verify_class(*f, SetProperty::kSubmodular), InputError);
  VerifyOptions opt;
  opt.sampled = true;
  opt.trials = 2000;
  opt.seed = 4;
  CHECK(verify_class(*f, SetProperty::kSubmodular, opt).pass);
}

TEST_CASE("xos is subadditive and monotone") {
  for (std::uint64_t seed : {1u, 2u}) {
    auto f = gen_xos(10, 4, seed);
    CHECK(verify_class(*f, SetProperty::kSubadditive).pass);
    CHECK(verify_class(*f, SetProperty::kMonotone).pass);
    const auto& trees = std::get<XosParams>(f->params()).trees;
    for (std::uint64_t b = 0; b < 1024; b += 37) {
      double best = 0.0;
      for (const auto& t : trees) {
        double v = 0.0;
        for (int i = 0; i < 10; ++i) v += (b >> i & 1) ? t[i] : 0.0;
        best = std::max(best, v);
      }
      CHECK(f->eval(bits(10, b)) == doctest::Approx(best).epsilon(1e-12));
    }
  }
}

TEST_CASE("degree-one interaction functions are modular") {
  auto f = gen_interaction(10, 1, 1.0, 3);
  for (int i = 0; i < 10; ++i) {
    const double gain = f->eval(mask(10, {i})) - f->eval(SubsetMask(10));
    for (std::uint64_t b = 0; b < 1024; ++b) {
      if (b >> i & 1) continue;
      const SubsetMask s = bits(10, b);
      SubsetMask si = s;
      si.set(i);
      REQUIRE(f->eval(si) - f->eval(s) == doctest::Approx(gain).epsilon(1e-12));
    }
  }
}

TEST_CASE("interaction eval sums terms meeting the set") {
  auto f = make_interaction(4, 2, {{mask(4, {0}), 1.0}, {mask(4, {1, 2}), 2.0}, {mask(4, {3}), 4.0}});
  CHECK(f->eval(SubsetMask(4)) == 0.0);
  CHECK(f->eval(mask(4, {2})) == 2.0);
  CHECK(f->eval(mask(4, {0, 1, 2})) == 3.0);
  CHECK(f->eval(SubsetMask::full(4)) == 7.0);
  CHECK_THROWS_AS(make_interaction(4, 1, {{mask(4, {1, 2}), 1.0}}), InputError);
  CHECK_THROWS_AS(make_interaction(4, 2, {{SubsetMask(4), 1.0}}), InputError);
}

TEST_CASE("coverage or-weights reproduce coverage") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto f = gen_coverage(10, 25, 0.15, seed);
    auto terms = coverage_or_weights(*f);
    auto g = make_interaction(10, 10, terms);
    for (std::uint64_t b = 0; b < 1024; ++b) {
      REQUIRE(g->eval(bits(10, b)) == doctest::Approx(f->eval(bits(10, b))).epsilon(1e-12));
    }
  }
  auto t = gen_truncated_coverage(5, 8, 0.4, 2, 1);
  CHECK_THROWS_AS(coverage_or_weights(*t), InputError);
}

TEST_CASE("rescaled coverage lies in [0, 1]") {
  auto f = rescale_to_unit(*gen_coverage(8, 20, 0.2, 4));
  CHECK(f->eval(SubsetMask::full(8)) == doctest::Approx(1.0));
  for (std::uint64_t b = 0; b < 256; ++b) {
    CHECK(f->eval(bits(8, b)) >= 0.0);
    CHECK(f->eval(bits(8, b)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("truncated coverage range") {
  auto f = gen_truncated_coverage(8, 20, 0.2, 2, 9);
  CHECK(verify_class(*f, SetProperty::kMonotone).pass);
  CHECK(verify_class(*f, SetProperty::kSubmodular).pass);
  for (std::uint64_t b = 0; b < 256; ++b) {
    const double v = f->eval(bits(8, b));
    CHECK((v == 0.0 || v == 1.0 || v == 2.0));
  }
}

TEST_CASE("disjunction and k-dnf eval") {
  auto d = make_disjunction(4, mask(4, {0, 2}));
  CHECK(d->eval(SubsetMask(4)) == 0.0);
  CHECK(d->eval(mask(4, {1, 3})) == 0.0);
  CHECK(d->eval(mask(4, {2})) == 1.0);
  auto k = make_kdnf(3, 1, {{mask(3, {0}), 2.0}, {mask(3, {1}), 1.0}});
  CHECK(k->eval(SubsetMask(3)) == 0.0);
  CHECK(k->eval(mask(3, {1, 2})) == 1.0);
  CHECK(k->eval(mask(3, {0, 1})) == 2.0);
}

TEST_CASE("evaluation is repeatable") {
  auto f = gen_xos(12, 3, 2);
  const SubsetMask s = bits(12, 0x5a5);
  const double v = f->eval(s);
  for (int r = 0; r < 5; ++r) CHECK(f->eval(s) == v);
}

}  // TEST_SUITE
