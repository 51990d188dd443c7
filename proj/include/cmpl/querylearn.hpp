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

#ifndef CMPL_QUERYLEARN_HPP_
#define CMPL_QUERYLEARN_HPP_

#include <cstdint>
#include <vector>

#include "cmpl/oracle.hpp"
#include "cmpl/subset.hpp"

namespace cmpl {

inline constexpr double kMaxBucketSubsets = 5e6;

struct BucketPredictor {
  int n = 0;
  int s = 0;
  // Value-equivalence groups of all subsets of size <= s, ascending in f.
  std::vector<std::vector<SubsetMask>> groups;
  std::uint64_t query_count = 0;
};

// Support of a boolean submodular target with f(empty) = 0; n oracle calls.
SubsetMask learn_disjunction(const ComparisonOracle& oracle);

BucketPredictor learn_buckets(const ComparisonOracle& oracle, int k);
// Requires alpha | 2k; buckets subsets of size 2k / alpha.
BucketPredictor learn_buckets_approx(const ComparisonOracle& oracle, int k, int alpha);

// Highest group index holding a subset of s.
int bucket_index(const BucketPredictor& p, const SubsetMask& s);

// 1 means f(s) <= f(t).
bool bucket_predict(const BucketPredictor& p, const SubsetMask& s, const SubsetMask& t);

}  // namespace cmpl

#endif  // CMPL_QUERYLEARN_HPP_
