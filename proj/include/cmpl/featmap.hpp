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

#ifndef CMPL_FEATMAP_HPP_
#define CMPL_FEATMAP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmpl/subset.hpp"

namespace cmpl {

enum class MapKind { kCharacteristic, kMonomial, kIntersect, kParity, kOrIndicator };

std::string to_string(MapKind kind);
MapKind map_kind_from_string(const std::string& s);

// Version tag of the feature enumeration: cardinality first, then ascending
// integer value of the mask. Serialized with every trained comparator.
inline constexpr const char* kEnumerationTag = "card-then-mask-v1";

inline constexpr double kMaxPolyDim = 5e6;
inline constexpr int kMaxOrIndicatorN = 16;

// Maps a subset to a real feature vector. Every kind except Characteristic is
// indexed by a family of subsets T:
//   Monomial(k)   [T ⊆ S],           |T| <= k (∅ included as the constant)
//   Intersect(k)  [T ∩ S ≠ ∅],       1 <= |T| <= k
//   Parity        (-1)^{|T ∩ S|},    |T| <= k, or an explicit support
//   OrIndicator   [T ∩ S ≠ ∅],       every nonempty T
class FeatureMap {
 public:
  FeatureMap() = default;

  static FeatureMap characteristic(int n);
  static FeatureMap monomial(int n, int k);
  static FeatureMap intersect(int n, int k);
  static FeatureMap parity_degree(int n, int k);
  // The support is re-ordered into the canonical enumeration.
  static FeatureMap parity_support(int n, std::vector<SubsetMask> support);
  static FeatureMap or_indicator(int n);

  MapKind kind() const { return kind_; }
  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  // Degree bound k; -1 for Characteristic, OrIndicator and explicit supports.
  int degree() const { return degree_; }
  bool explicit_support() const { return explicit_support_; }

  // Feature subsets in index order (empty for Characteristic).
  std::vector<SubsetMask> feature_sets() const;

  void embed(const SubsetMask& s, std::span<double> out) const;
  std::vector<double> embed(const SubsetMask& s) const;

  friend bool operator==(const FeatureMap& a, const FeatureMap& b);

 private:
  void set_features(const std::vector<SubsetMask>& sets);

  MapKind kind_ = MapKind::kCharacteristic;
  int n_ = 0;
  std::size_t dim_ = 0;
  int degree_ = -1;
  bool explicit_support_ = false;
  // Feature T_f is elems_[offsets_[f] .. offsets_[f+1]).
  std::vector<std::uint16_t> elems_;
  std::vector<std::uint32_t> offsets_;
};

// Function classes with a known linear (or p-th power of linear) structure.
enum class ClassTag {
  kModular,
  kSubmodular,
  kXos,
  kSubadditive,
  kCurvature,
  kXosTrees,
  kInteraction,
  kFourier,
  kCoverage,
  kSubmodularAdditive,
};

std::string to_string(ClassTag tag);
ClassTag class_tag_from_string(const std::string& s);

struct ClassParams {
  int n = 0;
  double kappa = 0.0;                  // curvature
  int trees = 1;                       // XOS with R trees
  double xi = 1.0;                     // XOS with R trees: separation R^xi
  int k = 1;                           // interaction degree
  std::vector<SubsetMask> support;     // Fourier support
  double eps = 0.1;                    // coverage: separation 1 + eps
  double xos_constant = 1.0;           // XOS: separation c * sqrt(n)
  int degree_cap = 1;                  // additive: parity degree used
  double beta = 0.1;                   // additive separation
};

struct MapSelection {
  FeatureMap map;
  double separation = 1.0;  // multiplicative factor, or additive beta for kSubmodularAdditive
};

// The feature map in which the class is approximately linear and the
// separation the learner is entitled to.
MapSelection select_map(ClassTag tag, const ClassParams& params);

}  // namespace cmpl

#endif  // CMPL_FEATMAP_HPP_
