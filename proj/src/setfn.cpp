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

#include "cmpl/setfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <type_traits>

#include "cmpl/errors.hpp"
#include "cmpl/rng.hpp"

namespace cmpl {

bool values_equal(double a, double b) {
  if (a == b) return true;
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= kValueRelTol * scale;
}

std::string to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kCoverage: return "coverage";
    case FunctionKind::kXos: return "xos";
    case FunctionKind::kGraphCut: return "cut";
    case FunctionKind::kFourierSparse: return "fourier";
    case FunctionKind::kInteraction: return "interaction";
    case FunctionKind::kCurvatureShift: return "curvature";
    case FunctionKind::kDisjunction: return "disjunction";
    case FunctionKind::kKDnf: return "kdnf";
  }
  return "unknown";
}

FunctionKind function_kind_from_string(const std::string& s) {
  for (auto k : {FunctionKind::kCoverage, FunctionKind::kXos, FunctionKind::kGraphCut,
                 FunctionKind::kFourierSparse, FunctionKind::kInteraction,
                 FunctionKind::kCurvatureShift, FunctionKind::kDisjunction, FunctionKind::kKDnf}) {
    if (to_string(k) == s) return k;
  }
  throw InputError("unknown function kind '" + s + "'");
}

SetFunction::SetFunction(int n, FunctionParams params, std::optional<std::uint64_t> seed)
    : n_(n), params_(std::move(params)), seed_(seed) {
  if (n < 1 || n > SubsetMask::kMaxN) {
    throw InputError("ground set size must be in [1, " + std::to_string(SubsetMask::kMaxN) + "]");
  }
  validate();
  if (const auto* cov = std::get_if<CoverageParams>(&params_)) {
    words_per_item_ = (cov->universe_size + 63) / 64;
    item_bits_.assign(static_cast<std::size_t>(n_) * words_per_item_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int u : cov->item_sets[i]) {
        item_bits_[static_cast<std::size_t>(i) * words_per_item_ + u / 64] |=
            std::uint64_t{1} << (u % 64);
      }
    }
  }
}

FunctionKind SetFunction::kind() const {
  return static_cast<FunctionKind>(params_.index());
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

void require_width(const SubsetMask& m, int n, const char* what) {
  require(m.n() == n, std::string(what) + " has width " + std::to_string(m.n()) +
                          ", expected " + std::to_string(n));
}

}  // namespace

void SetFunction::validate() const {
  std::visit(
      [this](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CoverageParams>) {
          require(p.universe_size >= 1, "coverage universe_size must be >= 1");
          require(static_cast<int>(p.item_sets.size()) == n_,
                  "coverage needs exactly n item sets");
          require(static_cast<int>(p.weights.size()) == p.universe_size,
                  "coverage needs one weight per universe element");
          for (double w : p.weights) {
            require(std::isfinite(w) && w >= 0.0, "coverage weights must be finite and >= 0");
          }
          for (const auto& items : p.item_sets) {
            for (int u : items) {
              require(u >= 0 && u < p.universe_size, "coverage item references bad universe index");
            }
          }
          if (p.truncate_at) require(*p.truncate_at >= 0.0, "truncation level must be >= 0");
        } else if constexpr (std::is_same_v<T, XosParams>) {
          require(!p.trees.empty(), "XOS needs at least one tree");
          for (const auto& t : p.trees) {
            require(static_cast<int>(t.size()) == n_, "XOS tree length must equal n");
            for (double w : t) require(std::isfinite(w) && w >= 0.0, "XOS weights must be >= 0");
          }
        } else if constexpr (std::is_same_v<T, GraphCutParams>) {
          for (const auto& e : p.edges) {
            require(e.u >= 0 && e.u < n_ && e.v >= 0 && e.v < n_ && e.u != e.v,
                    "cut edge endpoints must be distinct vertices in [0, n)");
            require(std::isfinite(e.weight), "cut edge weight must be finite");
          }
        } else if constexpr (std::is_same_v<T, FourierParams>) {
          require(p.support.size() == p.coeffs.size(), "Fourier support and coeffs differ in length");
          std::set<SubsetMask> seen;
          for (const auto& t : p.support) {
            require_width(t, n_, "Fourier support set");
            require(seen.insert(t).second, "Fourier support entries must be distinct");
          }
        } else if constexpr (std::is_same_v<T, InteractionParams>) {
          require(p.degree >= 1, "interaction degree must be >= 1");
          std::set<SubsetMask> seen;
          for (const auto& t : p.terms) {
            require_width(t.set, n_, "interaction term");
            const int c = t.set.cardinality();
            require(c >= 1 && c <= p.degree, "interaction term cardinality must be in [1, degree]");
            require(seen.insert(t.set).second, "interaction terms must be distinct");
          }
        } else if constexpr (std::is_same_v<T, CurvatureShiftParams>) {
          require(p.base != nullptr, "curvature shift needs a base function");
          require(p.base->n() == n_, "curvature shift base has a different n");
          require(p.kappa >= 0.0 && p.kappa <= 1.0, "curvature kappa must be in [0, 1]");
        } else if constexpr (std::is_same_v<T, DisjunctionParams>) {
          require_width(p.support, n_, "disjunction support");
        } else if constexpr (std::is_same_v<T, KDnfParams>) {
          require(p.k >= 1, "k-DNF k must be >= 1");
          for (const auto& t : p.terms) require_width(t.clause, n_, "DNF clause");
        }
      },
      params_);
}

double SetFunction::eval(const SubsetMask& s) const {
  if (s.n() != n_) {
    throw InputError("mask width " + std::to_string(s.n()) + " does not match n=" +
                     std::to_string(n_));
  }
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CoverageParams>) {
          std::vector<std::uint64_t> covered(words_per_item_, 0);
          for (int i : s.elements()) {
            const std::uint64_t* row = &item_bits_[static_cast<std::size_t>(i) * words_per_item_];
            for (int w = 0; w < words_per_item_; ++w) covered[w] |= row[w];
          }
          double total = 0.0;
          for (int w = 0; w < words_per_item_; ++w) {
            std::uint64_t x = covered[w];
            while (x) {
              total += p.weights[w * 64 + std::countr_zero(x)];
              x &= x - 1;
            }
          }
          if (p.truncate_at) total = std::min(total, *p.truncate_at);
          return total;
        } else if constexpr (std::is_same_v<T, XosParams>) {
          double best = 0.0;
          const auto elems = s.elements();
          for (const auto& tree : p.trees) {
            double v = 0.0;
            for (int i : elems) v += tree[i];
            best = std::max(best, v);
          }
          return best;
        } else if constexpr (std::is_same_v<T, GraphCutParams>) {
          double cut = 0.0;
          for (const auto& e : p.edges) {
            if (s.test(e.u) != s.test(e.v)) cut += e.weight;
          }
          return cut;
        } else if constexpr (std::is_same_v<T, FourierParams>) {
          double v = 0.0;
          for (std::size_t t = 0; t < p.support.size(); ++t) {
            v += (p.support[t].intersection_size(s) & 1) ? -p.coeffs[t] : p.coeffs[t];
          }
          return v;
        } else if constexpr (std::is_same_v<T, InteractionParams>) {
          double v = 0.0;
          for (const auto& t : p.terms) {
            if (t.set.intersects(s)) v += t.value;
          }
          return v;
        } else if constexpr (std::is_same_v<T, CurvatureShiftParams>) {
          return p.kappa * p.base->eval(s) + (1.0 - p.kappa) * s.cardinality();
        } else if constexpr (std::is_same_v<T, DisjunctionParams>) {
          return p.support.intersects(s) ? 1.0 : 0.0;
        } else {
          double best = 0.0;
          for (const auto& t : p.terms) {
            if (t.value > best && t.clause.is_subset_of(s)) best = t.value;
          }
          return best;
        }
      },
      params_);
}

// ---- generators -----------------------------------------------------------

SetFunctionPtr make_coverage(int n, int universe_size, std::vector<std::vector<int>> item_sets,
                             std::vector<double> weights, std::optional<double> truncate_at) {
  return std::make_shared<const SetFunction>(
      n, CoverageParams{universe_size, std::move(item_sets), std::move(weights), truncate_at});
}

namespace {

std::vector<std::vector<int>> draw_item_sets(Rng& rng, int n, int universe_size, double density) {
  std::vector<std::vector<int>> items(n);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < universe_size; ++u) {
      if (rng.bernoulli(density)) items[i].push_back(u);
    }
  }
  return items;
}

void check_coverage_args(int n, int universe_size, double density) {
  require(n >= 1, "coverage n must be >= 1");
  require(universe_size >= 1, "coverage universe size must be >= 1");
  require(density > 0.0 && density <= 1.0,
          "coverage density must be in (0, 1]; density 0 gives the all-zero function");
}

}  // namespace

SetFunctionPtr gen_coverage(int n, int universe_size, double density, std::uint64_t seed) {
  check_coverage_args(n, universe_size, density);
  Rng rng(seed);
  auto items = draw_item_sets(rng, n, universe_size, density);
  std::vector<double> weights(universe_size);
  for (double& w : weights) w = rng.uniform_open_closed();
  return std::make_shared<const SetFunction>(
      n, CoverageParams{universe_size, std::move(items), std::move(weights), std::nullopt}, seed);
}

SetFunctionPtr gen_truncated_coverage(int n, int universe_size, double density, int k,
                                      std::uint64_t seed) {
  check_coverage_args(n, universe_size, density);
  require(k >= 1, "truncation level k must be >= 1");
  Rng rng(seed);
  auto items = draw_item_sets(rng, n, universe_size, density);
  std::vector<double> weights(universe_size, 1.0);
  return std::make_shared<const SetFunction>(
      n, CoverageParams{universe_size, std::move(items), std::move(weights), double(k)}, seed);
}

SetFunctionPtr rescale_to_unit(const SetFunction& coverage) {
  const auto* p = std::get_if<CoverageParams>(&coverage.params());
  require(p != nullptr, "rescale_to_unit expects a coverage function");
  require(!p->truncate_at, "rescale_to_unit expects an untruncated coverage function");
  const double top = coverage.eval(SubsetMask::full(coverage.n()));
  require(top > 0.0, "cannot rescale a coverage function that is identically zero");
  CoverageParams q = *p;
  for (double& w : q.weights) w /= top;
  return std::make_shared<const SetFunction>(coverage.n(), std::move(q), coverage.seed());
}

std::vector<InteractionTerm> coverage_or_weights(const SetFunction& coverage) {
  const auto* p = std::get_if<CoverageParams>(&coverage.params());
  require(p != nullptr, "coverage_or_weights expects a coverage function");
  require(!p->truncate_at, "a truncated coverage function has no OR-indicator expansion");
  const int n = coverage.n();
  std::vector<SubsetMask> owners(p->universe_size, SubsetMask(n));
  for (int i = 0; i < n; ++i) {
    for (int u : p->item_sets[i]) owners[u].set(i);
  }
  std::map<SubsetMask, double> acc;
  for (int u = 0; u < p->universe_size; ++u) {
    if (!owners[u].empty()) acc[owners[u]] += p->weights[u];
  }
  std::vector<InteractionTerm> out;
  for (const auto& [set, w] : acc) out.push_back({set, w});
  return out;
}

SetFunctionPtr gen_xos(int n, int trees, std::uint64_t seed) {
  require(trees >= 1, "XOS needs at least one tree");
  Rng rng(seed);
  XosParams p;
  p.trees.assign(trees, std::vector<double>(n));
  for (auto& t : p.trees)
    for (double& w : t) w = rng.uniform_open_closed();
  return std::make_shared<const SetFunction>(n, std::move(p), seed);
}

SetFunctionPtr make_graph_cut(int n, std::vector<Edge> edges) {
  return std::make_shared<const SetFunction>(n, GraphCutParams{std::move(edges)});
}

SetFunctionPtr make_path_graph_cut(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return make_graph_cut(n, std::move(edges));
}

SetFunctionPtr gen_graph_cut(int n, double edge_prob, bool unit_weights, std::uint64_t seed) {
  require(edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability must be in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!rng.bernoulli(edge_prob)) continue;
      edges.push_back({u, v, unit_weights ? 1.0 : rng.uniform_open_closed()});
    }
  }
  return std::make_shared<const SetFunction>(n, GraphCutParams{std::move(edges)}, seed);
}

SetFunctionPtr cut_to_fourier(const SetFunction& cut) {
  const auto* p = std::get_if<GraphCutParams>(&cut.params());
  require(p != nullptr, "cut_to_fourier expects a graph cut function");
  // [x_u != x_v] = (1 - chi_{uv}) / 2, so f̂(∅) = W/2 and f̂({u,v}) = -w_uv/2.
  std::vector<SubsetMask> support{SubsetMask(cut.n())};
  std::vector<double> coeffs{0.0};
  std::vector<SubsetMask> pairs;
  std::vector<double> pair_coeffs;
  for (const auto& e : p->edges) {
    const auto pair = SubsetMask::from_elements(cut.n(), {e.u, e.v});
    coeffs[0] += e.weight / 2.0;
    auto it = std::find(pairs.begin(), pairs.end(), pair);
    if (it == pairs.end()) {
      pairs.push_back(pair);
      pair_coeffs.push_back(-e.weight / 2.0);
    } else {
      pair_coeffs[it - pairs.begin()] -= e.weight / 2.0;
    }
  }
  support.insert(support.end(), pairs.begin(), pairs.end());
  coeffs.insert(coeffs.end(), pair_coeffs.begin(), pair_coeffs.end());
  return std::make_shared<const SetFunction>(
      cut.n(), FourierParams{std::move(support), std::move(coeffs)}, cut.seed());
}

SetFunctionPtr make_fourier(int n, std::vector<SubsetMask> support, std::vector<double> coeffs) {
  return std::make_shared<const SetFunction>(n, FourierParams{std::move(support), std::move(coeffs)});
}

SetFunctionPtr gen_fourier(int n, int max_degree, int count, std::uint64_t seed) {
  require(max_degree >= 0 && count >= 1, "Fourier generator needs degree >= 0 and count >= 1");
  const double available = binomial_sum(n, 0, max_degree);
  require(available >= count, "not enough distinct sets of the requested degree");
  Rng rng(seed);
  std::set<SubsetMask> chosen;
  FourierParams p;
  while (static_cast<int>(p.support.size()) < count) {
    const int size = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
    SubsetMask t(n);
    while (t.cardinality() < std::min(size, n)) t.set(static_cast<int>(rng.below(n)));
    if (!chosen.insert(t).second) continue;
    p.support.push_back(t);
    p.coeffs.push_back(2.0 * rng.uniform01() - 1.0);
  }
  return std::make_shared<const SetFunction>(n, std::move(p), seed);
}

SetFunctionPtr make_interaction(int n, int degree, std::vector<InteractionTerm> terms) {
  return std::make_shared<const SetFunction>(n, InteractionParams{degree, std::move(terms)});
}

SetFunctionPtr gen_interaction(int n, int degree, double density, std::uint64_t seed) {
  require(degree >= 1 && degree <= n, "interaction degree must be in [1, n]");
  require(binomial_sum(n, 1, degree) <= 5e6, "interaction generator enumeration too large");
  Rng rng(seed);
  InteractionParams p{degree, {}};
  for (const auto& t : subsets_by_cardinality(n, 1, degree)) {
    if (rng.bernoulli(density)) p.terms.push_back({t, rng.uniform_open_closed()});
  }
  return std::make_shared<const SetFunction>(n, std::move(p), seed);
}

SetFunctionPtr gen_modular(int n, std::uint64_t seed) {
  Rng rng(seed);
  InteractionParams p{1, {}};
  for (int i = 0; i < n; ++i) {
    p.terms.push_back({SubsetMask::from_elements(n, {i}), rng.uniform_open_closed()});
  }
  return std::make_shared<const SetFunction>(n, std::move(p), seed);
}

SetFunctionPtr gen_curvature_shift(SetFunctionPtr base, double kappa) {
  require(base != nullptr, "curvature shift needs a base function");
  require(kappa >= 0.0 && kappa <= 1.0, "curvature kappa must be in [0, 1]");
  const int n = base->n();
  return std::make_shared<const SetFunction>(n, CurvatureShiftParams{std::move(base), kappa});
}

SetFunctionPtr make_disjunction(int n, SubsetMask support) {
  return std::make_shared<const SetFunction>(n, DisjunctionParams{support});
}

SetFunctionPtr gen_disjunction(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  SubsetMask support(n);
  for (int i = 0; i < n; ++i)
    if (rng.bernoulli(p)) support.set(i);
  return std::make_shared<const SetFunction>(n, DisjunctionParams{support}, seed);
}

SetFunctionPtr make_kdnf(int n, int k, std::vector<DnfTerm> terms) {
  return std::make_shared<const SetFunction>(n, KDnfParams{k, std::move(terms)});
}

SetFunctionPtr gen_kdnf(int n, int k, int terms, std::uint64_t seed) {
  require(k >= 1 && terms >= 0, "k-DNF generator needs k >= 1 and terms >= 0");
  Rng rng(seed);
  KDnfParams p{k, {}};
  const int max_clause = std::min(2 * k, n);
  for (int t = 0; t < terms; ++t) {
    const int size = 1 + static_cast<int>(rng.below(max_clause));
    SubsetMask clause(n);
    while (clause.cardinality() < size) clause.set(static_cast<int>(rng.below(n)));
    const double value = 1.0 + static_cast<double>(rng.below(k));
    p.terms.push_back({clause, value});
  }
  return std::make_shared<const SetFunction>(n, std::move(p), seed);
}

// ---- verification ---------------------------------------------------------

std::string to_string(SetProperty p) {
  switch (p) {
    case SetProperty::kMonotone: return "monotone";
    case SetProperty::kSubmodular: return "submodular";
    case SetProperty::kSubadditive: return "subadditive";
  }
  return "unknown";
}

namespace {

constexpr std::int64_t kNoFailure = std::numeric_limits<std::int64_t>::max();

std::vector<double> tabulate(const SetFunction& f) {
  const int n = f.n();
  const std::int64_t total = std::int64_t{1} << n;
  std::vector<double> values(total);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < total; ++s) {
    values[s] = f.eval(SubsetMask::from_bits(n, static_cast<std::uint64_t>(s)));
  }
  return values;
}

bool monotone_ok(double fs, double fsi) { return value_leq(fs, fsi); }

bool submodular_ok(double fs, double fsi, double ft, double fti) {
  // f(S+i) - f(S) >= f(T+i) - f(T)  <=>  f(T+i) + f(S) <= f(S+i) + f(T)
  return value_leq(fti + fs, fsi + ft);
}

bool subadditive_ok(double fu, double fs, double fs2) { return value_leq(fu, fs + fs2); }

VerifyResult verify_exhaustive(const SetFunction& f, SetProperty property) {
  const int n = f.n();
  const std::int64_t total = std::int64_t{1} << n;
  const auto values = tabulate(f);
  VerifyResult result;
  std::int64_t first = kNoFailure;

  switch (property) {
    case SetProperty::kMonotone: {
      // key = S * n + i
#pragma omp parallel for schedule(static) reduction(min : first)
      for (std::int64_t s = 0; s < total; ++s) {
        for (int i = 0; i < n; ++i) {
          if ((s >> i) & 1) continue;
          if (!monotone_ok(values[s], values[s | (std::int64_t{1} << i)])) {
            first = std::min(first, s * n + i);
            break;
          }
        }
      }
      result.checked = static_cast<std::uint64_t>(total) * n / 2;
      if (first != kNoFailure) {
        result.pass = false;
        result.witness = {SubsetMask::from_bits(n, first / n),
                          SubsetMask::from_elements(n, {static_cast<int>(first % n)})};
      }
      break;
    }
    case SetProperty::kSubmodular: {
      // Every S ⊆ T and i ∉ T; key = (T * 2^n + S) * n + i.
      std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first) reduction(+ : checked)
      for (std::int64_t t = 0; t < total; ++t) {
        bool found = false;
        // Subsets of t in ascending order: enumerate via complement trick.
        std::vector<std::int64_t> subs;
        for (std::int64_t s = t;; s = (s - 1) & t) {
          subs.push_back(s);
          if (s == 0) break;
        }
        std::reverse(subs.begin(), subs.end());
        for (std::int64_t s : subs) {
          for (int i = 0; i < n && !found; ++i) {
            if ((t >> i) & 1) continue;
            const std::int64_t bit = std::int64_t{1} << i;
            ++checked;
            if (!submodular_ok(values[s], values[s | bit], values[t], values[t | bit])) {
              first = std::min(first, (t * total + s) * n + i);
              found = true;
            }
          }
          if (found) break;
        }
      }
      result.checked = checked;
      if (first != kNoFailure) {
        result.pass = false;
        const std::int64_t i = first % n;
        const std::int64_t rest = first / n;
        result.witness = {SubsetMask::from_bits(n, rest % total),
                          SubsetMask::from_bits(n, rest / total),
                          SubsetMask::from_elements(n, {static_cast<int>(i)})};
      }
      break;
    }
    case SetProperty::kSubadditive: {
#pragma omp parallel for schedule(static) reduction(min : first)
      for (std::int64_t s = 0; s < total; ++s) {
        for (std::int64_t s2 = 0; s2 < total; ++s2) {
          if (!subadditive_ok(values[s | s2], values[s], values[s2])) {
            first = std::min(first, s * total + s2);
            break;
          }
        }
      }
      result.checked = static_cast<std::uint64_t>(total) * total;
      if (first != kNoFailure) {
        result.pass = false;
        result.witness = {SubsetMask::from_bits(n, first / total),
                          SubsetMask::from_bits(n, first % total)};
      }
      break;
    }
  }
  return result;
}

VerifyResult verify_sampled(const SetFunction& f, SetProperty property, const VerifyOptions& opt) {
  const int n = f.n();
  Rng rng(opt.seed);
  const ProductDistribution uniform{n, 0.5};
  VerifyResult result;
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    ++result.checked;
    switch (property) {
      case SetProperty::kMonotone: {
        const auto s = uniform.draw(rng);
        const int i = static_cast<int>(rng.below(n));
        if (s.test(i)) continue;
        auto si = s;
        si.set(i);
        if (!monotone_ok(f.eval(s), f.eval(si))) {
          result.pass = false;
          result.witness = {s, SubsetMask::from_elements(n, {i})};
          return result;
        }
        break;
      }
      case SetProperty::kSubmodular: {
        const auto t = uniform.draw(rng);
        const auto s = t & uniform.draw(rng);
        const int i = static_cast<int>(rng.below(n));
        if (t.test(i)) continue;
        auto si = s;
        si.set(i);
        auto ti = t;
        ti.set(i);
        if (!submodular_ok(f.eval(s), f.eval(si), f.eval(t), f.eval(ti))) {
          result.pass = false;
          result.witness = {s, t, SubsetMask::from_elements(n, {i})};
          return result;
        }
        break;
      }
      case SetProperty::kSubadditive: {
        const auto s = uniform.draw(rng);
        const auto s2 = uniform.draw(rng);
        if (!subadditive_ok(f.eval(s | s2), f.eval(s), f.eval(s2))) {
          result.pass = false;
          result.witness = {s, s2};
          return result;
        }
        break;
      }
    }
  }
  return result;
}

}  // namespace

VerifyResult verify_class(const SetFunction& f, SetProperty property, const VerifyOptions& options) {
  if (options.sampled) {
    require(options.trials > 0, "sampled verification needs a positive trial count");
    return verify_sampled(f, property, options);
  }
  if (f.n() > kExhaustiveVerifyMaxN) {
    throw InputError("exhaustive verification refuses n=" + std::to_string(f.n()) + " > " +
                     std::to_string(kExhaustiveVerifyMaxN) + "; request sampled mode");
  }
  return verify_exhaustive(f, property);
}

}  // namespace cmpl
