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

#include "cmpl/oracle.hpp"

#include <cassert>

#include "cmpl/errors.hpp"

namespace cmpl {

ComparisonOracle::ComparisonOracle(SetFunctionPtr target) : target_(std::move(target)) {
  if (!target_) throw InputError("comparison oracle needs a target function");
  n_ = target_->n();
}

bool ComparisonOracle::compare(const SubsetMask& a, const SubsetMask& b) const {
  if (a.n() != n_ || b.n() != n_) throw InputError("oracle query width does not match target n");
  queries_.fetch_add(1, std::memory_order_relaxed);
  return value_leq(target_->eval(a), target_->eval(b));
}

namespace {

void merge_sort(const ComparisonOracle& oracle, std::span<const SubsetMask> sets,
                std::vector<std::size_t>& idx, std::vector<std::size_t>& scratch, std::size_t lo,
                std::size_t hi) {
  if (hi - lo < 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort(oracle, sets, idx, scratch, lo, mid);
  merge_sort(oracle, sets, idx, scratch, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    // Take from the left run on ties; this keeps the sort stable.
    if (oracle.compare(sets[idx[a]], sets[idx[b]])) {
      scratch[out++] = idx[a++];
    } else {
      scratch[out++] = idx[b++];
    }
  }
  while (a < mid) scratch[out++] = idx[a++];
  while (b < hi) scratch[out++] = idx[b++];
  for (std::size_t k = lo; k < hi; ++k) idx[k] = scratch[k];
}

}  // namespace

std::vector<std::size_t> oracle_sort(const ComparisonOracle& oracle,
                                     std::span<const SubsetMask> sets) {
  std::vector<std::size_t> idx(sets.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::size_t> scratch(sets.size());
  merge_sort(oracle, sets, idx, scratch, 0, sets.size());
  return idx;
}

Location locate(const ComparisonOracle& oracle, const SubsetMask& s,
                std::span<const SubsetMask> sorted_landmarks) {
#ifndef NDEBUG
  for (std::size_t i = 1; i < sorted_landmarks.size(); ++i) {
    assert(oracle.compare(sorted_landmarks[i - 1], sorted_landmarks[i]) &&
           "locate: landmarks are not oracle-sorted");
  }
#endif
  // Count of landmarks with f(landmark) <= f(s); the prefix property of a
  // sorted list makes this a binary search.
  std::size_t lo = 0, hi = sorted_landmarks.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (oracle.compare(sorted_landmarks[mid], s)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  Location loc;
  loc.interval = static_cast<int>(lo);
  if (lo > 0) loc.ties_lower = oracle.compare(s, sorted_landmarks[lo - 1]);
  return loc;
}

std::vector<int> landmark_tie_groups(const ComparisonOracle& oracle,
                                     std::span<const SubsetMask> sorted_landmarks) {
  std::vector<int> group(sorted_landmarks.size(), 0);
  for (std::size_t i = 1; i < sorted_landmarks.size(); ++i) {
    const bool equal = oracle.compare(sorted_landmarks[i], sorted_landmarks[i - 1]);
    group[i] = group[i - 1] + (equal ? 0 : 1);
  }
  return group;
}

}  // namespace cmpl
