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

#include "cmpl/featmap.hpp"

#include <algorithm>
#include <cmath>

#include "cmpl/errors.hpp"

namespace cmpl {

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::kCharacteristic: return "characteristic";
    case MapKind::kMonomial: return "monomial";
    case MapKind::kIntersect: return "intersect";
    case MapKind::kParity: return "parity";
    case MapKind::kOrIndicator: return "or-indicator";
  }
  return "unknown";
}

MapKind map_kind_from_string(const std::string& s) {
  for (auto k : {MapKind::kCharacteristic, MapKind::kMonomial, MapKind::kIntersect,
                 MapKind::kParity, MapKind::kOrIndicator}) {
    if (to_string(k) == s) return k;
  }
  throw InputError("unknown feature map kind '" + s + "'");
}

namespace {

void check_n(int n) {
  if (n < 1 || n > SubsetMask::kMaxN) throw InputError("feature map n out of range");
}

void guard_poly(int n, int lo, int k, const char* what) {
  if (k < 0 || k > n) {
    throw InputError(std::string(what) + " degree k=" + std::to_string(k) + " must be in [0, n]");
  }
  const double dim = binomial_sum(n, lo, k);
  if (dim > kMaxPolyDim) {
    throw CapacityError(std::string(what) + " map would need dim " + std::to_string(dim) +
                            " > " + std::to_string(static_cast<long long>(kMaxPolyDim)),
                        dim);
  }
}

}  // namespace

void FeatureMap::set_features(const std::vector<SubsetMask>& sets) {
  elems_.clear();
  offsets_.assign(1, 0);
  for (const auto& t : sets) {
    for (int e : t.elements()) elems_.push_back(static_cast<std::uint16_t>(e));
    offsets_.push_back(static_cast<std::uint32_t>(elems_.size()));
  }
  dim_ = sets.size();
}

FeatureMap FeatureMap::characteristic(int n) {
  check_n(n);
  FeatureMap m;
  m.kind_ = MapKind::kCharacteristic;
  m.n_ = n;
  m.dim_ = static_cast<std::size_t>(n);
  return m;
}

FeatureMap FeatureMap::monomial(int n, int k) {
  check_n(n);
  guard_poly(n, 0, k, "monomial");
  FeatureMap m;
  m.kind_ = MapKind::kMonomial;
  m.n_ = n;
  m.degree_ = k;
  m.set_features(subsets_by_cardinality(n, 0, k));
  return m;
}

FeatureMap FeatureMap::intersect(int n, int k) {
  check_n(n);
  if (k < 1) throw InputError("intersect degree must be >= 1");
  guard_poly(n, 1, k, "intersect");
  FeatureMap m;
  m.kind_ = MapKind::kIntersect;
  m.n_ = n;
  m.degree_ = k;
  m.set_features(subsets_by_cardinality(n, 1, k));
  return m;
}

FeatureMap FeatureMap::parity_degree(int n, int k) {
  check_n(n);
  guard_poly(n, 0, k, "parity");
  FeatureMap m;
  m.kind_ = MapKind::kParity;
  m.n_ = n;
  m.degree_ = k;
  m.set_features(subsets_by_cardinality(n, 0, k));
  return m;
}

FeatureMap FeatureMap::parity_support(int n, std::vector<SubsetMask> support) {
  check_n(n);
  if (support.empty()) throw InputError("parity support must be nonempty");
  for (const auto& t : support) {
    if (t.n() != n) throw InputError("parity support set has the wrong width");
  }
  std::sort(support.begin(), support.end(), card_then_mask_less);
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw InputError("parity support entries must be distinct");
  }
  if (static_cast<double>(support.size()) > kMaxPolyDim) {
    throw CapacityError("parity support too large", static_cast<double>(support.size()));
  }
  FeatureMap m;
  m.kind_ = MapKind::kParity;
  m.n_ = n;
  m.explicit_support_ = true;
  m.set_features(support);
  return m;
}

FeatureMap FeatureMap::or_indicator(int n) {
  check_n(n);
  if (n > kMaxOrIndicatorN) {
    throw CapacityError("or-indicator map would need dim 2^" + std::to_string(n) +
                            " - 1; n is limited to " + std::to_string(kMaxOrIndicatorN),
                        std::ldexp(1.0, n) - 1.0);
  }
  FeatureMap m;
  m.kind_ = MapKind::kOrIndicator;
  m.n_ = n;
  m.set_features(subsets_by_cardinality(n, 1, n));
  return m;
}

std::vector<SubsetMask> FeatureMap::feature_sets() const {
  std::vector<SubsetMask> out;
  if (kind_ == MapKind::kCharacteristic) return out;
  out.reserve(dim_);
  for (std::size_t f = 0; f < dim_; ++f) {
    SubsetMask t(n_);
    for (std::uint32_t p = offsets_[f]; p < offsets_[f + 1]; ++p) t.set(elems_[p]);
    out.push_back(t);
  }
  return out;
}

void FeatureMap::embed(const SubsetMask& s, std::span<double> out) const {
  if (s.n() != n_) {
    throw InputError("embed: mask width " + std::to_string(s.n()) + " != map n " +
                     std::to_string(n_));
  }
  if (out.size() != dim_) throw InputError("embed: output span has the wrong length");
  if (kind_ == MapKind::kCharacteristic) {
    for (int i = 0; i < n_; ++i) out[i] = s.test(i) ? 1.0 : 0.0;
    return;
  }
  for (std::size_t f = 0; f < dim_; ++f) {
    const std::uint32_t b = offsets_[f], e = offsets_[f + 1];
    switch (kind_) {
      case MapKind::kMonomial: {
        bool all = true;
        for (std::uint32_t p = b; p < e && all; ++p) all = s.test(elems_[p]);
        out[f] = all ? 1.0 : 0.0;
        break;
      }
      case MapKind::kIntersect:
      case MapKind::kOrIndicator: {
        bool any = false;
        for (std::uint32_t p = b; p < e && !any; ++p) any = s.test(elems_[p]);
        out[f] = any ? 1.0 : 0.0;
        break;
      }
      case MapKind::kParity: {
        int parity = 0;
        for (std::uint32_t p = b; p < e; ++p) parity ^= s.test(elems_[p]) ? 1 : 0;
        out[f] = parity ? -1.0 : 1.0;
        break;
      }
      case MapKind::kCharacteristic:
        break;
    }
  }
}

std::vector<double> FeatureMap::embed(const SubsetMask& s) const {
  std::vector<double> out(dim_);
  embed(s, out);
  return out;
}

bool operator==(const FeatureMap& a, const FeatureMap& b) {
  return a.kind_ == b.kind_ && a.n_ == b.n_ && a.dim_ == b.dim_ && a.degree_ == b.degree_ &&
         a.explicit_support_ == b.explicit_support_ && a.elems_ == b.elems_ &&
         a.offsets_ == b.offsets_;
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::kModular: return "modular";
    case ClassTag::kSubmodular: return "submodular";
    case ClassTag::kXos: return "xos";
    case ClassTag::kSubadditive: return "subadditive";
    case ClassTag::kCurvature: return "curvature";
    case ClassTag::kXosTrees: return "xos-trees";
    case ClassTag::kInteraction: return "interaction";
    case ClassTag::kFourier: return "fourier";
    case ClassTag::kCoverage: return "coverage";
    case ClassTag::kSubmodularAdditive: return "submodular-additive";
  }
  return "unknown";
}

ClassTag class_tag_from_string(const std::string& s) {
  for (auto t : {ClassTag::kModular, ClassTag::kSubmodular, ClassTag::kXos, ClassTag::kSubadditive,
                 ClassTag::kCurvature, ClassTag::kXosTrees, ClassTag::kInteraction,
                 ClassTag::kFourier, ClassTag::kCoverage, ClassTag::kSubmodularAdditive}) {
    if (to_string(t) == s) return t;
  }
  throw InputError("unknown function class '" + s + "'");
}

MapSelection select_map(ClassTag tag, const ClassParams& p) {
  const int n = p.n;
  const double rn = std::sqrt(static_cast<double>(n));
  switch (tag) {
    case ClassTag::kModular:
      return {FeatureMap::characteristic(n), 1.0};
    case ClassTag::kSubmodular:
      return {FeatureMap::characteristic(n), rn};
    case ClassTag::kXos:
      return {FeatureMap::characteristic(n), p.xos_constant * rn};
    case ClassTag::kSubadditive:
      return {FeatureMap::characteristic(n), rn * std::log(static_cast<double>(n))};
    case ClassTag::kCurvature: {
      if (p.kappa < 0.0 || p.kappa > 1.0) throw InputError("curvature kappa must be in [0, 1]");
      const double bound = p.kappa >= 1.0 ? rn : std::min(rn, 1.0 / (1.0 - p.kappa));
      return {FeatureMap::characteristic(n), bound};
    }
    case ClassTag::kXosTrees: {
      if (!(p.xi > 0.0)) throw InputError("xi must be > 0");
      if (p.trees < 1) throw InputError("XOS tree count must be >= 1");
      const int k = std::min(n, static_cast<int>(std::ceil(1.0 / p.xi)));
      return {FeatureMap::monomial(n, k), std::pow(static_cast<double>(p.trees), p.xi)};
    }
    case ClassTag::kInteraction:
      return {FeatureMap::intersect(n, p.k), 1.0};
    case ClassTag::kFourier:
      return {FeatureMap::parity_support(n, p.support), 1.0};
    case ClassTag::kCoverage:
      if (!(p.eps > 0.0)) throw InputError("coverage eps must be > 0");
      return {FeatureMap::or_indicator(n), 1.0 + p.eps};
    case ClassTag::kSubmodularAdditive:
      if (!(p.beta > 0.0 && p.beta < 1.0)) throw InputError("beta must be in (0, 1)");
      return {FeatureMap::parity_degree(n, std::min(p.degree_cap, n)), p.beta};
  }
  throw InputError("unknown class tag");
}

}  // namespace cmpl
