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

#ifndef CMPL_TESTS_HELPERS_HPP_
#define CMPL_TESTS_HELPERS_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cmpl/comparator.hpp"
#include "cmpl/setfn.hpp"
#include "cmpl/subset.hpp"

namespace cmpl::testing {

inline SubsetMask mask(int n, std::initializer_list<int> elems) {
  return SubsetMask::from_elements(n, elems);
}

inline SubsetMask bits(int n, std::uint64_t b) { return SubsetMask::from_bits(n, b); }

// Three items over a three-element universe with unit weights:
// item 0 -> {u0}, item 1 -> {u1}, item 2 -> {u0, u1, u2}.
inline SetFunctionPtr cov3() {
  return make_coverage(3, 3, {{0}, {1}, {0, 1, 2}}, {1.0, 1.0, 1.0});
}

// Hand table of the function above, indexed by mask bits.
inline const std::vector<double>& cov3_table() {
  static const std::vector<double> t = {0, 1, 1, 2, 3, 3, 3, 3};
  return t;
}

// Fourier coefficients by the Walsh transform of a full value table:
// fhat(T) = 2^-n sum_S f(S) (-1)^{|T ∩ S|}.
inline SetFunctionPtr fourier_from_table(int n, const std::vector<double>& table) {
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<SubsetMask> support;
  std::vector<double> coeffs;
  for (std::uint64_t t = 0; t < total; ++t) {
    double c = 0.0;
    for (std::uint64_t s = 0; s < total; ++s) {
      c += (std::popcount(t & s) % 2 ? -1.0 : 1.0) * table[s];
    }
    c /= static_cast<double>(total);
    if (c != 0.0) {
      support.push_back(bits(n, t));
      coeffs.push_back(c);
    }
  }
  return make_fourier(n, std::move(support), std::move(coeffs));
}

// A comparator with one hand-set pair (0, 1).
inline Comparator single_pair_comparator(FeatureMap map, std::vector<double> w, double theta) {
  Comparator c;
  const int n = map.n();
  c.map = std::move(map);
  c.landmarks = {SubsetMask(n), SubsetMask::full(n)};
  c.provenance.m = 2;
  c.pairs = {{0, 1}};
  LinearSeparator sep;
  sep.w = std::move(w);
  sep.theta = theta;
  c.separators = {sep};
  return c;
}

}  // namespace cmpl::testing

#endif  // CMPL_TESTS_HELPERS_HPP_
