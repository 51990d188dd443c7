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

#ifndef CMPL_SEPTRAIN_HPP_
#define CMPL_SEPTRAIN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cmpl {

enum class Label : std::int8_t { kNegative = -1, kPositive = 1 };

struct LabeledSample {
  std::vector<double> x;
  Label label = Label::kNegative;
};

// Dense training data: row r is rows[r*dim .. (r+1)*dim). `counts` holds the
// multiplicity of each row (identical samples are stored once).
struct TrainingSet {
  std::size_t dim = 0;
  std::vector<double> rows;
  std::vector<Label> labels;
  std::vector<double> counts;

  std::size_t size() const { return labels.size(); }
  std::span<const double> row(std::size_t r) const { return {rows.data() + r * dim, dim}; }
  double total_count() const;
  void add(std::span<const double> x, Label label, double count = 1.0);

  static TrainingSet from_samples(std::span<const LabeledSample> samples);
};

// Classifies x as negative when w.x < theta and positive when w.x > theta.
struct LinearSeparator {
  std::vector<double> w;
  double theta = 0.0;
  // Set for the placeholder returned on an empty training set.
  bool vacuous = false;
};

enum class Side { kNegative, kPositive, kOnThreshold };

inline constexpr double kThresholdRelTol = 1e-9;

double score(const LinearSeparator& sep, std::span<const double> x);
// On-threshold when |w.x - theta| <= 1e-9 * (1 + |theta|).
Side classify(const LinearSeparator& sep, std::span<const double> x);
bool classifies_correctly(const LinearSeparator& sep, std::span<const double> x, Label label);

// Exact feasibility of the margin-1 program
//   w.x <= theta - 1 (negatives),  w.x >= theta + 1 (positives).
// Returns nullopt when the classes are not strictly linearly separable.
std::optional<LinearSeparator> train_realizable(const TrainingSet& data);
std::optional<LinearSeparator> train_realizable(std::span<const LabeledSample> samples);

struct TolerantResult {
  LinearSeparator sep;
  double empirical_error = 0.0;   // misclassified weight / total weight
  double error_count = 0.0;       // misclassified weight (sample count)
  bool realizable = false;        // found by the exact path
};

// Exact path first; otherwise minimize total hinge loss and sweep the
// threshold along the resulting direction for the fewest 0-1 mistakes.
// On-threshold samples count as mistakes. `tolerance` is recorded by callers,
// who make the acceptance decision.
TolerantResult train_tolerant(const TrainingSet& data);
TolerantResult train_tolerant(std::span<const LabeledSample> samples, double tolerance);

// Misclassified weight of `sep` over `data`, recounted independently.
double count_errors(const LinearSeparator& sep, const TrainingSet& data);

}  // namespace cmpl

#endif  // CMPL_SEPTRAIN_HPP_
