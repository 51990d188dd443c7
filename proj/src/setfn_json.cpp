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

#include <fstream>
#include <sstream>

#include "cmpl/errors.hpp"
#include "cmpl/io.hpp"

namespace cmpl {

Json subset_to_json(const SubsetMask& s) { return Json(s.elements()); }

SubsetMask subset_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InputError("subset must be a list of element indices");
  SubsetMask s(n);
  for (const auto& e : j) {
    const int i = e.get<int>();
    if (i < 0 || i >= n) {
      throw InputError("element " + std::to_string(i) + " is outside [0, " + std::to_string(n) + ")");
    }
    s.set(i);
  }
  return s;
}

namespace {

Json params_to_json(const SetFunction& f) {
  return std::visit(
      [&](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        Json j;
        if constexpr (std::is_same_v<T, CoverageParams>) {
          j["universe_size"] = p.universe_size;
          j["item_sets"] = p.item_sets;
          j["weights"] = p.weights;
          if (p.truncate_at) j["truncate_at"] = *p.truncate_at;
        } else if constexpr (std::is_same_v<T, XosParams>) {
          j["trees"] = p.trees;
        } else if constexpr (std::is_same_v<T, GraphCutParams>) {
          j["edges"] = Json::array();
          for (const auto& e : p.edges) j["edges"].push_back({e.u, e.v, e.weight});
        } else if constexpr (std::is_same_v<T, FourierParams>) {
          j["support"] = Json::array();
          for (const auto& s : p.support) j["support"].push_back(subset_to_json(s));
          j["coeffs"] = p.coeffs;
        } else if constexpr (std::is_same_v<T, InteractionParams>) {
          j["degree"] = p.degree;
          j["terms"] = Json::array();
          for (const auto& t : p.terms) j["terms"].push_back({{"set", subset_to_json(t.set)}, {"value", t.value}});
        } else if constexpr (std::is_same_v<T, CurvatureShiftParams>) {
          j["kappa"] = p.kappa;
          j["base"] = function_to_json(*p.base);
        } else if constexpr (std::is_same_v<T, DisjunctionParams>) {
          j["support"] = subset_to_json(p.support);
        } else {
          j["k"] = p.k;
          j["terms"] = Json::array();
          for (const auto& t : p.terms) {
            j["terms"].push_back({{"clause", subset_to_json(t.clause)}, {"value", t.value}});
          }
        }
        return j;
      },
      f.params());
}

FunctionParams params_from_json(FunctionKind kind, int n, const Json& j) {
  switch (kind) {
    case FunctionKind::kCoverage: {
      CoverageParams p;
      p.universe_size = j.at("universe_size").get<int>();
      p.item_sets = j.at("item_sets").get<std::vector<std::vector<int>>>();
      p.weights = j.at("weights").get<std::vector<double>>();
      if (j.contains("truncate_at")) p.truncate_at = j.at("truncate_at").get<double>();
      return p;
    }
    case FunctionKind::kXos:
      return XosParams{j.at("trees").get<std::vector<std::vector<double>>>()};
    case FunctionKind::kGraphCut: {
      GraphCutParams p;
      for (const auto& e : j.at("edges")) {
        p.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
      }
      return p;
    }
    case FunctionKind::kFourierSparse: {
      FourierParams p;
      for (const auto& s : j.at("support")) p.support.push_back(subset_from_json(s, n));
      p.coeffs = j.at("coeffs").get<std::vector<double>>();
      return p;
    }
    case FunctionKind::kInteraction: {
      InteractionParams p;
      p.degree = j.at("degree").get<int>();
      for (const auto& t : j.at("terms")) {
        p.terms.push_back({subset_from_json(t.at("set"), n), t.at("value").get<double>()});
      }
      return p;
    }
    case FunctionKind::kCurvatureShift:
      return CurvatureShiftParams{function_from_json(j.at("base")), j.at("kappa").get<double>()};
    case FunctionKind::kDisjunction:
      return DisjunctionParams{subset_from_json(j.at("support"), n)};
    case FunctionKind::kKDnf: {
      KDnfParams p;
      p.k = j.at("k").get<int>();
      for (const auto& t : j.at("terms")) {
        p.terms.push_back({subset_from_json(t.at("clause"), n), t.at("value").get<double>()});
      }
      return p;
    }
  }
  throw InputError("unknown function kind");
}

}  // namespace

Json function_to_json(const SetFunction& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = to_string(f.kind());
  j["n"] = f.n();
  j["seed"] = f.seed() ? Json(*f.seed()) : Json();
  j["params"] = params_to_json(f);
  return j;
}

SetFunctionPtr function_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw InputError("unsupported function schema_version " + j.at("schema_version").dump());
    }
    const int n = j.at("n").get<int>();
    if (n < 1 || n > SubsetMask::kMaxN) throw InputError("function n out of range");
    const FunctionKind kind = function_kind_from_string(j.at("kind").get<std::string>());
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
    return std::make_shared<const SetFunction>(n, params_from_json(kind, n, j.at("params")), seed);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed function JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace cmpl
