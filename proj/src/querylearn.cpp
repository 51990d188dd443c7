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

#include "cmpl/querylearn.hpp"

#include <algorithm>
#include <string>

#include "cmpl/errors.hpp"

namespace cmpl {

SubsetMask learn_disjunction(const ComparisonOracle& oracle) {
  const int n = oracle.n();
  const SubsetMask none(n);
  SubsetMask support(n);
  for (int i = 0; i < n; ++i) {
    SubsetMask single(n);
    single.set(i);
    if (!oracle.compare(single, none)) support.set(i);
  }
  return support;
}

namespace {

BucketPredictor bucket_sets(const ComparisonOracle& oracle, int s) {
  const int n = oracle.n();
  const double count = binomial_sum(n, 0, s);
  if (count > kMaxBucketSubsets) {
    throw CapacityError("bucket learner would sort " + std::to_string(count) +
                            " subsets of size <= " + std::to_string(s),
                        count);
  }
  const std::uint64_t q0 = oracle.query_count();
  const std::vector<SubsetMask> sets = subsets_by_cardinality(n, 0, std::min(s, n));
  const std::vector<std::size_t> order = oracle_sort(oracle, sets);

  BucketPredictor p;
  p.n = n;
  p.s = s;
  p.groups.push_back({sets[order[0]]});
  for (std::size_t t = 1; t < order.size(); ++t) {
    const SubsetMask& prev = sets[order[t - 1]];
    const SubsetMask& cur = sets[order[t]];
    // Sorted order already gives f(prev) <= f(cur); one call settles equality.
    if (oracle.compare(cur, prev)) {
      p.groups.back().push_back(cur);
    } else {
      p.groups.push_back({cur});
    }
  }
  p.query_count = oracle.query_count() - q0;
  return p;
}

}  // namespace

BucketPredictor learn_buckets(const ComparisonOracle& oracle, int k) {
  if (k < 1) throw InputError("k must be >= 1");
  return bucket_sets(oracle, 2 * k);
}

BucketPredictor learn_buckets_approx(const ComparisonOracle& oracle, int k, int alpha) {
  if (k < 1) throw InputError("k must be >= 1");
  if (alpha < 1 || (2 * k) % alpha != 0) {
    throw InputError("alpha=" + std::to_string(alpha) + " must divide 2k=" + std::to_string(2 * k));
  }
  return bucket_sets(oracle, 2 * k / alpha);
}

int bucket_index(const BucketPredictor& p, const SubsetMask& s) {
  if (s.n() != p.n) throw InputError("mask width does not match the bucket predictor");
  for (int g = static_cast<int>(p.groups.size()) - 1; g >= 0; --g) {
    for (const auto& member : p.groups[g]) {
      if (member.is_subset_of(s)) return g;
    }
  }
  return -1;
}

bool bucket_predict(const BucketPredictor& p, const SubsetMask& s, const SubsetMask& t) {
  return bucket_index(p, s) <= bucket_index(p, t);
}

}  // namespace cmpl
