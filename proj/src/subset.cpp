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

#include "cmpl/subset.hpp"

#include <cmath>
#include <limits>

#include "cmpl/errors.hpp"
#include "cmpl/rng.hpp"

namespace cmpl {

SubsetMask::SubsetMask(int n) : n_(n) {
  if (n < 0 || n > kMaxN) {
    throw InputError("ground set size " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxN) + "]");
  }
}

SubsetMask SubsetMask::from_bits(int n, std::uint64_t bits) {
  SubsetMask m(n);
  if (n > 64) throw InputError("from_bits requires n <= 64");
  if (n < 64 && (bits >> n) != 0) {
    throw InputError("mask has bits set at or above n=" + std::to_string(n));
  }
  m.words_[0] = bits;
  return m;
}

SubsetMask SubsetMask::from_elements(int n, std::span<const int> elements) {
  SubsetMask m(n);
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw InputError("element " + std::to_string(e) + " outside ground set of size " +
                       std::to_string(n));
    }
    m.set(e);
  }
  return m;
}

SubsetMask SubsetMask::full(int n) {
  SubsetMask m(n);
  for (int i = 0; i < n; ++i) m.set(i);
  return m;
}

int SubsetMask::cardinality() const {
  int c = 0;
  for (int w = 0; w < word_count(); ++w) c += std::popcount(words_[w]);
  return c;
}

bool SubsetMask::empty() const {
  for (int w = 0; w < word_count(); ++w)
    if (words_[w]) return false;
  return true;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  const int wc = word_count();
  for (int w = 0; w < wc; ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool SubsetMask::intersects(const SubsetMask& other) const {
  const int wc = word_count();
  for (int w = 0; w < wc; ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

int SubsetMask::intersection_size(const SubsetMask& other) const {
  int c = 0;
  const int wc = word_count();
  for (int w = 0; w < wc; ++w) c += std::popcount(words_[w] & other.words_[w]);
  return c;
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (int w = 0; w < word_count(); ++w) {
    std::uint64_t x = words_[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

SubsetMask SubsetMask::operator|(const SubsetMask& o) const {
  SubsetMask r = *this;
  for (int w = 0; w < kWords; ++w) r.words_[w] |= o.words_[w];
  if (o.n_ > r.n_) r.n_ = o.n_;
  return r;
}

SubsetMask SubsetMask::operator&(const SubsetMask& o) const {
  SubsetMask r = *this;
  for (int w = 0; w < kWords; ++w) r.words_[w] &= o.words_[w];
  return r;
}

std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int w = SubsetMask::kWords - 1; w >= 0; --w) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t SubsetMask::hash() const {
  std::uint64_t h = static_cast<std::uint64_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (int w = 0; w < word_count(); ++w) {
    h ^= words_[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

bool card_then_mask_less(const SubsetMask& a, const SubsetMask& b) {
  const int ca = a.cardinality();
  const int cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return a < b;
}

std::vector<SubsetMask> subsets_by_cardinality(int n, int lo, int hi) {
  std::vector<SubsetMask> out;
  if (hi > n) hi = n;
  for (int size = std::max(lo, 0); size <= hi; ++size) {
    // Combinations in colex order, which is ascending integer mask order.
    std::vector<int> c(size);
    for (int i = 0; i < size; ++i) c[i] = i;
    while (true) {
      out.push_back(SubsetMask::from_elements(n, c));
      int i = 0;
      while (i < size && ((i + 1 < size ? c[i + 1] : n) == c[i] + 1)) ++i;
      if (i == size) break;
      ++c[i];
      for (int j = 0; j < i; ++j) c[j] = j;
    }
  }
  return out;
}

double binomial_sum(int n, int lo, int hi) {
  double total = 0.0;
  if (hi > n) hi = n;
  double c = 1.0;  // C(n, 0)
  for (int size = 0; size <= hi; ++size) {
    if (size > 0) c = c * (n - size + 1) / size;
    if (size >= lo) total += c;
    if (!std::isfinite(total)) return std::numeric_limits<double>::infinity();
  }
  return std::round(total);
}

SubsetMask ProductDistribution::draw(Rng& rng) const {
  SubsetMask s(n);
  for (int i = 0; i < n; ++i)
    if (rng.bernoulli(p)) s.set(i);
  return s;
}

}  // namespace cmpl
