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

#ifndef CMPL_IO_HPP_
#define CMPL_IO_HPP_

#include <string>

#include "cmpl/comparator.hpp"
#include "cmpl/harness.hpp"
#include "cmpl/querylearn.hpp"
#include "cmpl/setfn.hpp"
#include "json.hpp"

namespace cmpl {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json subset_to_json(const SubsetMask& s);
SubsetMask subset_from_json(const Json& j, int n);

Json function_to_json(const SetFunction& f);
SetFunctionPtr function_from_json(const Json& j);

Json feature_map_to_json(const FeatureMap& map);
FeatureMap feature_map_from_json(const Json& j);

Json comparator_to_json(const Comparator& cmp);
Comparator comparator_from_json(const Json& j);

Json buckets_to_json(const BucketPredictor& p);
BucketPredictor buckets_from_json(const Json& j);

SweepSpec sweep_spec_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cmpl

#endif  // CMPL_IO_HPP_
