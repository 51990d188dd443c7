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

#ifndef CMPL_ORACLE_HPP_
#define CMPL_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "cmpl/setfn.hpp"
#include "cmpl/subset.hpp"

namespace cmpl {

// The learner's only access to the target: answers whether f(a) <= f(b).
// The target itself is private; learner code receives this object and never
// the SetFunction. The counter is shared by concurrent callers.
class ComparisonOracle {
 public:
  explicit ComparisonOracle(SetFunctionPtr target);

  ComparisonOracle(const ComparisonOracle&) = delete;
  ComparisonOracle& operator=(const ComparisonOracle&) = delete;

  // True when f(a) <= f(b) up to the shared value tolerance.
  bool compare(const SubsetMask& a, const SubsetMask& b) const;

  int n() const { return n_; }
  std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }

 private:
  SetFunctionPtr target_;
  int n_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// Stable merge sort driven by compare. Returns `order` such that
// sets[order[0]], sets[order[1]], ... is nondecreasing in f.
std::vector<std::size_t> oracle_sort(const ComparisonOracle& oracle,
                                     std::span<const SubsetMask> sets);

// Where a set falls among oracle-sorted landmarks S_1..S_m (1-based).
struct Location {
  // i in [0, m] with f(S_i) <= f(S) < f(S_{i+1}); 0 below every landmark and
  // m at or above the last.
  int interval = 0;
  // True when interval >= 1 and f(S) equals f(S_interval).
  bool ties_lower = false;
};

// Binary search with ceil(log2(m+1)) compares, plus one compare to detect a
// tie with the lower landmark. In debug builds the landmark order is audited.
Location locate(const ComparisonOracle& oracle, const SubsetMask& s,
                std::span<const SubsetMask> sorted_landmarks);

// Group ids of consecutive equal-valued landmarks (m-1 compares). Entry i is
// the group of landmark i (0-based); groups are numbered from 0 upward.
std::vector<int> landmark_tie_groups(const ComparisonOracle& oracle,
                                     std::span<const SubsetMask> sorted_landmarks);

}  // namespace cmpl

#endif  // CMPL_ORACLE_HPP_
