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

#ifndef CMPL_SUBSET_HPP_
#define CMPL_SUBSET_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cmpl {

class Rng;

// A subset of the ground set {0, ..., n-1}. Element i is bit i. Only the low
// n bits are ever set.
class SubsetMask {
 public:
  static constexpr int kMaxN = 1024;
  static constexpr int kWords = kMaxN / 64;

  SubsetMask() = default;
  explicit SubsetMask(int n);

  // Low-word constructor for n <= 64. Bits at or above n are an input error.
  static SubsetMask from_bits(int n, std::uint64_t bits);
  static SubsetMask from_elements(int n, std::span<const int> elements);
  static SubsetMask from_elements(int n, std::initializer_list<int> elements) {
    return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
  }
  static SubsetMask full(int n);

  int n() const { return n_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int cardinality() const;
  bool empty() const;
  bool is_subset_of(const SubsetMask& other) const;
  bool intersects(const SubsetMask& other) const;
  int intersection_size(const SubsetMask& other) const;

  // Valid only for n <= 64.
  std::uint64_t bits() const { return words_[0]; }
  std::vector<int> elements() const;

  SubsetMask operator|(const SubsetMask& o) const;
  SubsetMask operator&(const SubsetMask& o) const;

  // Equal width and equal bits.
  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  // Orders by width, then by integer value of the mask.
  friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b);

  std::size_t hash() const;
  std::string to_string() const;  // "{0,2,5}"

 private:
  int word_count() const { return (n_ + 63) >> 6; }

  int n_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

// Cardinality first, then integer value of the mask. This is the fixed
// feature enumeration order used by every feature map.
bool card_then_mask_less(const SubsetMask& a, const SubsetMask& b);

// All subsets of {0..n-1} with cardinality in [lo, hi], in card-then-mask
// order. Callers guard the total count.
std::vector<SubsetMask> subsets_by_cardinality(int n, int lo, int hi);

// Sum_{L=lo..hi} C(n, L), saturating at +inf as a double.
double binomial_sum(int n, int lo, int hi);

// Draws a subset where each element appears independently with probability
// p. p = 0.5 is the uniform distribution over all 2^n subsets.
struct ProductDistribution {
  int n = 0;
  double p = 0.5;
  SubsetMask draw(Rng& rng) const;
};

}  // namespace cmpl

#endif  // CMPL_SUBSET_HPP_
