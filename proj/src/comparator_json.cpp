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

#include <algorithm>

#include "cmpl/errors.hpp"
#include "cmpl/io.hpp"

namespace cmpl {

Json feature_map_to_json(const FeatureMap& map) {
  Json j;
  j["kind"] = to_string(map.kind());
  j["n"] = map.n();
  j["dim"] = map.dim();
  j["degree"] = map.degree();
  j["enumeration"] = kEnumerationTag;
  if (map.explicit_support()) {
    j["support"] = Json::array();
    for (const auto& s : map.feature_sets()) j["support"].push_back(subset_to_json(s));
  }
  return j;
}

FeatureMap feature_map_from_json(const Json& j) {
  if (j.at("enumeration").get<std::string>() != kEnumerationTag) {
    throw InputError("feature map uses an unknown enumeration order");
  }
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  FeatureMap map;
  switch (map_kind_from_string(j.at("kind").get<std::string>())) {
    case MapKind::kCharacteristic: map = FeatureMap::characteristic(n); break;
    case MapKind::kMonomial: map = FeatureMap::monomial(n, degree); break;
    case MapKind::kIntersect: map = FeatureMap::intersect(n, degree); break;
    case MapKind::kOrIndicator: map = FeatureMap::or_indicator(n); break;
    case MapKind::kParity:
      if (j.contains("support")) {
        std::vector<SubsetMask> support;
        for (const auto& s : j.at("support")) support.push_back(subset_from_json(s, n));
        map = FeatureMap::parity_support(n, std::move(support));
      } else {
        map = FeatureMap::parity_degree(n, degree);
      }
      break;
  }
  if (map.dim() != j.at("dim").get<std::size_t>()) {
    throw InputError("feature map dimension does not match its descriptor");
  }
  return map;
}

Json comparator_to_json(const Comparator& cmp) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["feature_map"] = feature_map_to_json(cmp.map);
  j["landmarks"] = Json::array();
  for (const auto& s : cmp.landmarks) j["landmarks"].push_back(subset_to_json(s));
  j["pairs"] = Json::array();
  j["separators"] = Json::array();
  for (std::size_t p = 0; p < cmp.pairs.size(); ++p) {
    j["pairs"].push_back({cmp.pairs[p].first, cmp.pairs[p].second});
    j["separators"].push_back({{"w", cmp.separators[p].w}, {"theta", cmp.separators[p].theta}});
  }
  const Provenance& v = cmp.provenance;
  Json pv;
  pv["eps"] = v.eps;
  pv["delta"] = v.delta;
  pv["mode"] = v.mode;
  pv["alpha"] = v.alpha;
  pv["beta"] = v.beta;
  pv["degree_cap"] = v.degree_cap ? Json(*v.degree_cap) : Json();
  pv["gamma"] = v.gamma;
  pv["paper_degree"] = v.paper_degree;
  pv["used_degree"] = v.used_degree;
  pv["cap_binding"] = v.cap_binding;
  pv["tolerance"] = v.tolerance;
  pv["m"] = v.m;
  pv["train_size"] = v.train_size;
  pv["unique_train_masks"] = v.unique_train_masks;
  pv["sample_constant"] = v.sample_constant;
  pv["adjacent_only"] = v.adjacent_only;
  pv["seed"] = v.seed;
  pv["query_count"] = v.query_count;
  pv["r_before_prune"] = v.r_before_prune;
  pv["log_base"] = "natural";
  j["provenance"] = pv;
  return j;
}

Comparator comparator_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw InputError("unsupported comparator schema_version " + j.at("schema_version").dump());
    }
    Comparator cmp;
    cmp.map = feature_map_from_json(j.at("feature_map"));
    const int n = cmp.map.n();
    for (const auto& s : j.at("landmarks")) cmp.landmarks.push_back(subset_from_json(s, n));
    const int m = static_cast<int>(cmp.landmarks.size());
    const auto& pairs = j.at("pairs");
    const auto& seps = j.at("separators");
    if (pairs.size() != seps.size()) throw InputError("pairs and separators differ in length");
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const int a = pairs[p].at(0).get<int>(), b = pairs[p].at(1).get<int>();
      if (!(0 <= a && a < b && b < m)) throw InputError("pair index out of range");
      cmp.pairs.emplace_back(a, b);
      LinearSeparator sep;
      sep.w = seps[p].at("w").get<std::vector<double>>();
      sep.theta = seps[p].at("theta").get<double>();
      if (sep.w.size() != cmp.map.dim()) throw InputError("separator dimension mismatch");
      cmp.separators.push_back(std::move(sep));
    }
    const Json& pv = j.at("provenance");
    Provenance& v = cmp.provenance;
    v.eps = pv.at("eps").get<double>();
    v.delta = pv.at("delta").get<double>();
    v.mode = pv.at("mode").get<std::string>();
    v.alpha = pv.at("alpha").get<double>();
    v.beta = pv.at("beta").get<double>();
    if (!pv.at("degree_cap").is_null()) v.degree_cap = pv.at("degree_cap").get<int>();
    v.gamma = pv.at("gamma").get<double>();
    v.paper_degree = pv.at("paper_degree").get<double>();
    v.used_degree = pv.at("used_degree").get<int>();
    v.cap_binding = pv.at("cap_binding").get<bool>();
    v.tolerance = pv.at("tolerance").get<double>();
    v.m = pv.at("m").get<int>();
    v.train_size = pv.at("train_size").get<std::size_t>();
    v.unique_train_masks = pv.at("unique_train_masks").get<std::size_t>();
    v.sample_constant = pv.at("sample_constant").get<double>();
    v.adjacent_only = pv.at("adjacent_only").get<bool>();
    v.seed = pv.at("seed").get<std::uint64_t>();
    v.query_count = pv.at("query_count").get<std::uint64_t>();
    v.r_before_prune = pv.at("r_before_prune").get<std::size_t>();
    return cmp;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed comparator JSON: ") + e.what());
  }
}

Json buckets_to_json(const BucketPredictor& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = p.n;
  j["s"] = p.s;
  j["query_count"] = p.query_count;
  j["groups"] = Json::array();
  for (const auto& g : p.groups) {
    Json group = Json::array();
    for (const auto& s : g) group.push_back(subset_to_json(s));
    j["groups"].push_back(std::move(group));
  }
  return j;
}

BucketPredictor buckets_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw InputError("unsupported bucket schema_version");
    }
    BucketPredictor p;
    p.n = j.at("n").get<int>();
    p.s = j.at("s").get<int>();
    p.query_count = j.value("query_count", std::uint64_t{0});
    for (const auto& g : j.at("groups")) {
      std::vector<SubsetMask> group;
      for (const auto& s : g) group.push_back(subset_from_json(s, p.n));
      p.groups.push_back(std::move(group));
    }
    return p;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed bucket JSON: ") + e.what());
  }
}

SweepSpec sweep_spec_from_json(const Json& j) {
  static const char* kKnown[] = {
      "generator", "class", "n", "eps", "delta", "landmarks", "train_sizes", "degree_caps",
      "seeds", "trials", "sample_constant", "adjacent_only", "kernel", "alpha", "beta",
      "inclusion_p", "universe", "density", "rescale", "edge_prob", "degree", "terms", "trees",
      "kappa", "xi"};
  try {
    for (const auto& [key, _] : j.items()) {
      if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
        throw InputError("unknown sweep field '" + key + "'");
      }
    }
    SweepSpec s;
    s.generator = j.value("generator", s.generator);
    if (j.contains("class")) s.class_tag = class_tag_from_string(j.at("class").get<std::string>());
    if (j.contains("n")) s.n_values = j.at("n").get<std::vector<int>>();
    if (j.contains("eps")) s.eps_values = j.at("eps").get<std::vector<double>>();
    s.delta = j.value("delta", s.delta);
    if (j.contains("landmarks")) s.landmarks = j.at("landmarks").get<int>();
    if (j.contains("train_sizes")) s.train_sizes = j.at("train_sizes").get<std::vector<std::size_t>>();
    if (j.contains("degree_caps")) s.degree_caps = j.at("degree_caps").get<std::vector<int>>();
    if (!j.contains("seeds")) throw InputError("sweep spec needs an explicit 'seeds' list");
    s.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    s.trials = j.value("trials", s.trials);
    s.sample_constant = j.value("sample_constant", s.sample_constant);
    s.adjacent_only = j.value("adjacent_only", s.adjacent_only);
    if (j.contains("kernel")) s.kernel = pair_kernel_from_string(j.at("kernel").get<std::string>());
    if (j.contains("alpha")) s.alpha = j.at("alpha").get<double>();
    s.beta = j.value("beta", s.beta);
    s.inclusion_p = j.value("inclusion_p", s.inclusion_p);
    s.universe = j.value("universe", s.universe);
    s.density = j.value("density", s.density);
    s.rescale = j.value("rescale", s.rescale);
    s.edge_prob = j.value("edge_prob", s.edge_prob);
    s.degree = j.value("degree", s.degree);
    s.terms = j.value("terms", s.terms);
    s.trees = j.value("trees", s.trees);
    s.kappa = j.value("kappa", s.kappa);
    s.xi = j.value("xi", s.xi);
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed sweep spec: ") + e.what());
  }
}

}  // namespace cmpl
