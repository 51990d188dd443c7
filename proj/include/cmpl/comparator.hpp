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

#ifndef CMPL_COMPARATOR_HPP_
#define CMPL_COMPARATOR_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cmpl/featmap.hpp"
#include "cmpl/oracle.hpp"
#include "cmpl/rng.hpp"
#include "cmpl/septrain.hpp"
#include "cmpl/subset.hpp"

namespace cmpl {

struct Multiplicative {
  double alpha = 1.0;
};

struct Additive {
  double beta = 0.1;
  std::optional<int> degree_cap;
};

using TrainMode = std::variant<Multiplicative, Additive>;

// How the per-pair feasibility problems are scheduled. All three produce the
// same minimal pair set and the same separators.
enum class PairKernel {
  kSerialReference,  // every pair, one LP each
  kStaircase,        // walks the monotone feasibility frontier, <= 2m LPs
  kParallel,         // OpenMP over i, binary search over j
};

std::string to_string(PairKernel k);
PairKernel pair_kernel_from_string(const std::string& s);

struct TrainConfig {
  double eps = 0.1;
  double delta = 0.1;
  TrainMode mode = Multiplicative{};
  std::optional<int> landmark_count_override;
  std::optional<std::size_t> train_set_size_override;
  double sample_constant = 1.0;
  bool adjacent_only = false;
  std::uint64_t seed = 0;
  PairKernel kernel = PairKernel::kStaircase;
};

using SampleSource = std::function<SubsetMask(Rng&)>;

SampleSource product_source(int n, double p);
SampleSource uniform_source(int n);

struct Provenance {
  double eps = 0.0;
  double delta = 0.0;
  std::string mode;  // "multiplicative" or "additive"
  double alpha = 1.0;
  double beta = 0.0;
  std::optional<int> degree_cap;
  double gamma = 0.0;
  double paper_degree = 0.0;
  int used_degree = -1;
  bool cap_binding = false;
  int m = 0;
  std::size_t train_size = 0;
  std::size_t unique_train_masks = 0;
  double sample_constant = 1.0;
  bool adjacent_only = false;
  std::uint64_t seed = 0;
  std::uint64_t query_count = 0;
  std::size_t r_before_prune = 0;
  double tolerance = 0.0;  // additive admission threshold on the error fraction
};

using PairIndex = std::pair<int, int>;

struct Comparator {
  FeatureMap map;
  std::vector<SubsetMask> landmarks;      // oracle-sorted
  std::vector<PairIndex> pairs;           // R, ascending (i, j)
  std::vector<LinearSeparator> separators;  // aligned with pairs
  Provenance provenance;
};

// Labels of a deduplicated training sample relative to the sorted landmarks.
// A mask is negative for (i, j) iff i >= neg_from and positive iff j < interval.
struct LocatedSamples {
  std::vector<SubsetMask> masks;
  std::vector<double> counts;
  std::vector<int> interval;
  std::vector<int> neg_from;
  std::vector<double> features;  // row-major, masks.size() x dim
  std::size_t dim = 0;
  double total = 0.0;
};

TrainingSet pair_training_set(const LocatedSamples& data, int i, int j);

struct PairRecord {
  int i = 0;
  int j = 0;
  bool admitted = false;
  double error_count = 0.0;
  double negatives = 0.0;
  double positives = 0.0;
  LinearSeparator sep;  // empty w when not admitted on the realizable path
};

struct TrainResult {
  Comparator comparator;
  LocatedSamples samples;
  std::vector<PairRecord> records;  // every pair the kernel trained, ascending (i, j)
  std::size_t lp_count = 0;
};

int landmark_count(double eps, double delta);
std::size_t train_set_size(int m, double eps, double delta, std::size_t dim, double c0);
double additive_gamma(double beta, double eps, double delta);
double additive_paper_degree(double gamma);

TrainResult train_multiplicative(const ComparisonOracle& oracle, const FeatureMap& map,
                                 const TrainConfig& config, const SampleSource& source);

// Builds the Parity map itself from the computed degree.
TrainResult train_additive(const ComparisonOracle& oracle, const TrainConfig& config,
                           const SampleSource& source);

std::vector<PairIndex> prune_minimal(std::vector<PairIndex> pairs);

bool predict(const Comparator& cmp, const SubsetMask& s, const SubsetMask& t);

// Index into cmp.pairs of the first firing pair, or -1.
int firing_pair(const Comparator& cmp, const SubsetMask& s, const SubsetMask& t);

}  // namespace cmpl

#endif  // CMPL_COMPARATOR_HPP_
