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

#ifndef CMPL_SETFN_HPP_
#define CMPL_SETFN_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cmpl/subset.hpp"

namespace cmpl {

// Relative tolerance for equality of function values. Integer-valued
// constructions compare exactly because the tolerance is below one ulp of
// any difference between distinct small integers.
inline constexpr double kValueRelTol = 1e-9;

bool values_equal(double a, double b);
// a <= b, with near-equal values counting as equal.
inline bool value_leq(double a, double b) { return a <= b || values_equal(a, b); }

enum class FunctionKind {
  kCoverage,
  kXos,
  kGraphCut,
  kFourierSparse,
  kInteraction,
  kCurvatureShift,
  kDisjunction,
  kKDnf,
};

std::string to_string(FunctionKind kind);
FunctionKind function_kind_from_string(const std::string& s);

class SetFunction;

// Element i of the ground set owns item_sets[i], a set of universe indices.
struct CoverageParams {
  int universe_size = 0;
  std::vector<std::vector<int>> item_sets;
  std::vector<double> weights;
  // When present, f(S) = min(truncate_at, covered weight).
  std::optional<double> truncate_at;
};

struct XosParams {
  std::vector<std::vector<double>> trees;
};

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

struct GraphCutParams {
  std::vector<Edge> edges;
};

struct FourierParams {
  std::vector<SubsetMask> support;
  std::vector<double> coeffs;
};

struct InteractionTerm {
  SubsetMask set;
  double value = 0.0;
};

// f(S) = sum of g(T) over T with T ∩ S nonempty.
struct InteractionParams {
  int degree = 1;
  std::vector<InteractionTerm> terms;
};

struct CurvatureShiftParams {
  std::shared_ptr<const SetFunction> base;
  double kappa = 1.0;
};

struct DisjunctionParams {
  SubsetMask support;
};

// One term of a pseudo-boolean DNF: contributes `value` when every element of
// `clause` is in S.
struct DnfTerm {
  SubsetMask clause;
  double value = 0.0;
};

// f(S) = max(0, max over terms with clause ⊆ S of value).
struct KDnfParams {
  int k = 1;
  std::vector<DnfTerm> terms;
};

using FunctionParams =
    std::variant<CoverageParams, XosParams, GraphCutParams, FourierParams,
                 InteractionParams, CurvatureShiftParams, DisjunctionParams, KDnfParams>;

// Immutable ground-truth set function. eval is pure.
class SetFunction {
 public:
  SetFunction(int n, FunctionParams params, std::optional<std::uint64_t> seed = std::nullopt);

  int n() const { return n_; }
  FunctionKind kind() const;
  const FunctionParams& params() const { return params_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  double eval(const SubsetMask& s) const;

 private:
  void validate() const;

  int n_;
  FunctionParams params_;
  std::optional<std::uint64_t> seed_;
  // Coverage only: per-item universe bitsets, words_per_item words each.
  std::vector<std::uint64_t> item_bits_;
  int words_per_item_ = 0;
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

// ---- generators -----------------------------------------------------------

SetFunctionPtr make_coverage(int n, int universe_size, std::vector<std::vector<int>> item_sets,
                             std::vector<double> weights,
                             std::optional<double> truncate_at = std::nullopt);

// Each item covers each universe element independently with probability
// `density`; weights uniform on (0, 1].
SetFunctionPtr gen_coverage(int n, int universe_size, double density, std::uint64_t seed);

// Unit-weight coverage truncated at k: a monotone submodular function with
// range {0, ..., k}.
SetFunctionPtr gen_truncated_coverage(int n, int universe_size, double density, int k,
                                      std::uint64_t seed);

// Coverage with weights divided by the total covered weight, so the range is
// [0, 1] with f(ground set) = 1.
SetFunctionPtr rescale_to_unit(const SetFunction& coverage);

// R trees with weights uniform on (0, 1].
// OR-indicator weights of an untruncated coverage function: one term per
// distinct item set A_u = {i : u in item i}, weighted by the total weight of
// such universe elements. c(S) = sum of weights of terms meeting S.
std::vector<InteractionTerm> coverage_or_weights(const SetFunction& coverage);

SetFunctionPtr gen_xos(int n, int trees, std::uint64_t seed);

SetFunctionPtr make_graph_cut(int n, std::vector<Edge> edges);
SetFunctionPtr make_path_graph_cut(int n);
// Erdos-Renyi edges with probability edge_prob; weights uniform on (0, 1],
// or all 1 when unit_weights.
SetFunctionPtr gen_graph_cut(int n, double edge_prob, bool unit_weights, std::uint64_t seed);

// Fourier expansion of a cut function: support {∅} ∪ {{u,v} : edges}.
SetFunctionPtr cut_to_fourier(const SetFunction& cut);

SetFunctionPtr make_fourier(int n, std::vector<SubsetMask> support, std::vector<double> coeffs);
// `count` distinct random support sets of cardinality <= max_degree with
// coefficients uniform on [-1, 1].
SetFunctionPtr gen_fourier(int n, int max_degree, int count, std::uint64_t seed);

SetFunctionPtr make_interaction(int n, int degree, std::vector<InteractionTerm> terms);
// Every T with 1 <= |T| <= degree gets g(T) uniform on (0, 1] with
// probability `density`.
SetFunctionPtr gen_interaction(int n, int degree, double density, std::uint64_t seed);
// Degree-1 interaction function with positive weights: a modular function.
SetFunctionPtr gen_modular(int n, std::uint64_t seed);

SetFunctionPtr gen_curvature_shift(SetFunctionPtr base, double kappa);

SetFunctionPtr make_disjunction(int n, SubsetMask support);
// Each element is in the support with probability p.
SetFunctionPtr gen_disjunction(int n, double p, std::uint64_t seed);

SetFunctionPtr make_kdnf(int n, int k, std::vector<DnfTerm> terms);
// `terms` random clauses of size 1..2k with values in {1, ..., k}.
SetFunctionPtr gen_kdnf(int n, int k, int terms, std::uint64_t seed);

// ---- brute-force verification --------------------------------------------

enum class SetProperty { kMonotone, kSubmodular, kSubadditive };

std::string to_string(SetProperty p);

struct VerifyOptions {
  bool sampled = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Largest n accepted by exhaustive verification.
inline constexpr int kExhaustiveVerifyMaxN = 14;

// On failure `witness` holds the violating sets: (S, i) for monotone as
// {S, {i}}; (S, T, i) for submodular; (S, S') for subadditive.
struct VerifyResult {
  bool pass = true;
  std::vector<SubsetMask> witness;
  std::uint64_t checked = 0;
};

VerifyResult verify_class(const SetFunction& f, SetProperty property,
                          const VerifyOptions& options = {});

}  // namespace cmpl

#endif  // CMPL_SETFN_HPP_
