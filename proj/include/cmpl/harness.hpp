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

#ifndef CMPL_HARNESS_HPP_
#define CMPL_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cmpl/comparator.hpp"
#include "cmpl/featmap.hpp"
#include "cmpl/setfn.hpp"

namespace cmpl {

enum class SeparationKind { kMultiplicative, kAdditive };

struct Separation {
  SeparationKind kind = SeparationKind::kMultiplicative;
  double value = 1.0;  // alpha or beta

  static Separation multiplicative(double alpha) { return {SeparationKind::kMultiplicative, alpha}; }
  static Separation additive(double beta) { return {SeparationKind::kAdditive, beta}; }
};

// Expects lo <= hi. Multiplicative separation also requires lo < hi, so a
// pair of equal values never counts (0 * alpha <= 0 would otherwise).
bool is_separated(const Separation& sep, double lo, double hi);

struct ErrorEstimate {
  std::uint64_t trials = 0;
  std::uint64_t miss_count = 0;
  std::uint64_t separated_count = 0;
  std::uint64_t both_fire_count = 0;
  std::uint64_t query_count = 0;
  double conditional_error = 0.0;  // NaN when vacuous
  double std_error = 0.0;          // sqrt(p(1-p)/separated), NaN when vacuous
  bool vacuous = false;            // separated_count == 0
};

// Draws `trials` i.i.d. ordered pairs from dist, orients by ground truth.
ErrorEstimate measure_error(const Comparator& cmp, const SetFunction& truth,
                            const SampleSource& dist, const Separation& sep,
                            std::uint64_t trials, std::uint64_t seed);

// Every ordered pair of subsets; n <= 12.
ErrorEstimate measure_error_exhaustive(const Comparator& cmp, const SetFunction& truth,
                                       const Separation& sep);

struct SweepSpec {
  std::string generator = "coverage";  // coverage, modular, cut, interaction, fourier, xos, curvature
  ClassTag class_tag = ClassTag::kSubmodular;
  std::vector<int> n_values{8};
  std::vector<double> eps_values{0.1};
  double delta = 0.1;
  std::optional<int> landmarks;
  std::vector<std::size_t> train_sizes;  // empty: use the formula
  std::vector<int> degree_caps{1};       // additive class only
  std::vector<std::uint64_t> seeds{1};
  std::uint64_t trials = 10000;
  double sample_constant = 1.0;
  bool adjacent_only = false;
  PairKernel kernel = PairKernel::kStaircase;
  std::optional<double> alpha;  // overrides the class separation
  double beta = 0.3;
  double inclusion_p = 0.5;     // product distribution; 0.5 is uniform
  // Generator parameters.
  int universe = 40;
  double density = 0.2;
  bool rescale = false;
  double edge_prob = 0.3;
  int degree = 2;
  int terms = 8;
  int trees = 3;
  double kappa = 0.5;
  double xi = 0.5;
  bool wall_time = true;
  int jobs = 1;
};

struct SweepCell {
  std::size_t index = 0;
  int n = 0;
  double eps = 0.0;
  std::optional<std::size_t> train_size;
  int degree_cap = 1;
};

struct SweepRow {
  SweepCell cell;
  std::uint64_t seed = 0;
  std::uint64_t row_seed = 0;
  std::string status = "ok";  // ok, capacity, input
  std::string message;
  int m = 0;
  std::size_t train_size = 0;
  std::size_t unique_train = 0;
  int used_degree = -1;
  Separation separation;
  std::size_t r_before_prune = 0;
  std::size_t r_size = 0;
  ErrorEstimate estimate;
  double wall_ms = 0.0;
};

std::vector<SweepCell> sweep_cells(const SweepSpec& spec);

// Stream derivation inside a row: target mix_seed(row_seed, 1), training
// mix_seed(row_seed, 2), evaluation mix_seed(row_seed, 3).
SetFunctionPtr sweep_target(const SweepSpec& spec, int n, std::uint64_t row_seed);
SweepRow run_cell(const SweepSpec& spec, const SweepCell& cell, std::uint64_t seed);
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Column order is fixed; see sweep_csv_header().
std::string sweep_csv_header(bool wall_time);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool wall_time);
void write_sweep_long_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows, bool wall_time);

}  // namespace cmpl

#endif  // CMPL_HARNESS_HPP_
