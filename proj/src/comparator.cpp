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

#include "cmpl/comparator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "cmpl/errors.hpp"

namespace cmpl {

std::string to_string(PairKernel k) {
  switch (k) {
    case PairKernel::kSerialReference: return "serial";
    case PairKernel::kStaircase: return "staircase";
    case PairKernel::kParallel: return "parallel";
  }
  return "unknown";
}

PairKernel pair_kernel_from_string(const std::string& s) {
  for (auto k : {PairKernel::kSerialReference, PairKernel::kStaircase, PairKernel::kParallel}) {
    if (to_string(k) == s) return k;
  }
  throw InputError("unknown pair kernel '" + s + "'");
}

SampleSource product_source(int n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("inclusion probability must be in [0, 1]");
  ProductDistribution dist{n, p};
  return [dist](Rng& rng) { return dist.draw(rng); };
}

SampleSource uniform_source(int n) {
  if (n <= 64) {
    return [n](Rng& rng) {
      const std::uint64_t bits = n == 64 ? rng.next_u64() : rng.next_u64() & ((1ULL << n) - 1);
      return SubsetMask::from_bits(n, bits);
    };
  }
  return product_source(n, 0.5);
}

int landmark_count(double eps, double delta) {
  if (!(eps > 0 && eps < 1 && delta > 0 && delta < 1)) {
    throw InputError("eps and delta must lie in (0, 1)");
  }
  return static_cast<int>(std::ceil((2.0 / eps) * std::log(1.0 / (eps * delta))));
}

std::size_t train_set_size(int m, double eps, double delta, std::size_t dim, double c0) {
  if (!(c0 > 0)) throw InputError("sample constant must be > 0");
  const double mm = static_cast<double>(m) * m / eps;
  const double size =
      std::ceil(c0 * mm * (static_cast<double>(dim) * std::log(mm) + std::log(1.0 / delta)));
  if (!(size < 1e12)) {
    throw CapacityError("training set size " + std::to_string(size) + " is not drawable", size);
  }
  return static_cast<std::size_t>(std::max(1.0, size));
}

double additive_gamma(double beta, double eps, double delta) {
  return beta / (1.0 + (2.0 / eps) * std::log(1.0 / (eps * delta)) * std::sqrt(2.0 / eps));
}

double additive_paper_degree(double gamma) {
  return std::ceil((25.0 / std::pow(gamma, 0.8)) * std::log(std::cbrt(2.0) / gamma));
}

TrainingSet pair_training_set(const LocatedSamples& data, int i, int j) {
  TrainingSet t;
  t.dim = data.dim;
  for (std::size_t r = 0; r < data.masks.size(); ++r) {
    const std::span<const double> x(data.features.data() + r * data.dim, data.dim);
    if (data.neg_from[r] <= i) t.add(x, Label::kNegative, data.counts[r]);
    if (data.interval[r] > j) t.add(x, Label::kPositive, data.counts[r]);
  }
  return t;
}

std::vector<PairIndex> prune_minimal(std::vector<PairIndex> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<PairIndex> out;
  for (const auto& p : pairs) {
    bool dominated = false;
    for (const auto& q : pairs) {
      if (q != p && p.first <= q.first && p.second >= q.second) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

namespace {

struct Sampled {
  std::vector<SubsetMask> landmarks;
  LocatedSamples located;
};

Sampled draw_and_locate(const ComparisonOracle& oracle, const FeatureMap& map, int m,
                        std::size_t train_size, const SampleSource& source, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SubsetMask> raw;
  raw.reserve(m);
  for (int i = 0; i < m; ++i) raw.push_back(source(rng));
  for (const auto& s : raw) {
    if (s.n() != oracle.n()) throw InputError("sample source width does not match the oracle");
  }

  Sampled out;
  const auto order = oracle_sort(oracle, raw);
  for (std::size_t idx : order) out.landmarks.push_back(raw[idx]);
  const std::vector<int> group = landmark_tie_groups(oracle, out.landmarks);
  std::vector<int> group_start(m, 0);
  for (int i = m - 1; i >= 0; --i) group_start[group[i]] = i;

  // Repeated masks share one oracle lookup and one LP row with a count.
  LocatedSamples& data = out.located;
  std::unordered_map<SubsetMask, std::size_t, SubsetMaskHash> index;
  for (std::size_t t = 0; t < train_size; ++t) {
    SubsetMask s = source(rng);
    auto [it, inserted] = index.try_emplace(s, data.masks.size());
    if (inserted) {
      data.masks.push_back(s);
      data.counts.push_back(1.0);
    } else {
      data.counts[it->second] += 1.0;
    }
  }
  data.total = static_cast<double>(train_size);
  const std::size_t u = data.masks.size();
  data.interval.assign(u, 0);
  data.neg_from.assign(u, 0);
  data.dim = map.dim();
  data.features.assign(u * data.dim, 0.0);

  const std::span<const SubsetMask> lm(out.landmarks);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(u); ++r) {
    const Location loc = locate(oracle, data.masks[r], lm);
    data.interval[r] = loc.interval;
    data.neg_from[r] = loc.ties_lower ? group_start[group[loc.interval - 1]] : loc.interval;
    map.embed(data.masks[r], std::span<double>(data.features.data() + r * data.dim, data.dim));
  }
  return out;
}

struct PairOutcome {
  PairRecord record;
  bool feasible = false;
};

PairOutcome solve_realizable(const LocatedSamples& data, int i, int j) {
  const TrainingSet t = pair_training_set(data, i, j);
  PairOutcome out;
  out.record.i = i;
  out.record.j = j;
  for (std::size_t r = 0; r < t.size(); ++r) {
    (t.labels[r] == Label::kNegative ? out.record.negatives : out.record.positives) += t.counts[r];
  }
  if (auto sep = train_realizable(t)) {
    out.feasible = true;
    out.record.admitted = true;
    out.record.sep = std::move(*sep);
  } else {
    out.record.error_count = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

PairOutcome solve_tolerant(const LocatedSamples& data, int i, int j, double tolerance) {
  const TrainingSet t = pair_training_set(data, i, j);
  PairOutcome out;
  out.record.i = i;
  out.record.j = j;
  for (std::size_t r = 0; r < t.size(); ++r) {
    (t.labels[r] == Label::kNegative ? out.record.negatives : out.record.positives) += t.counts[r];
  }
  TolerantResult res = train_tolerant(t);
  out.record.error_count = res.error_count;
  out.record.admitted = res.error_count / data.total <= tolerance;
  out.feasible = out.record.admitted;
  out.record.sep = std::move(res.sep);
  return out;
}

struct PairSearch {
  std::vector<PairRecord> records;
  std::vector<PairIndex> feasible;  // pairs known or implied feasible before pruning
  std::vector<PairIndex> minimal;
  std::vector<LinearSeparator> minimal_seps;
  std::size_t r_before_prune = 0;
  std::size_t lp_count = 0;
};

void sort_records(std::vector<PairRecord>& records) {
  std::sort(records.begin(), records.end(), [](const PairRecord& a, const PairRecord& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
}

// Generic path: an explicit list of candidate pairs, each decided independently.
PairSearch search_listed(const LocatedSamples& data, const std::vector<PairIndex>& candidates,
                         bool tolerant, double tolerance, bool parallel) {
  std::vector<PairOutcome> outcomes(candidates.size());
  const auto body = [&](std::size_t c) {
    const auto [i, j] = candidates[c];
    outcomes[c] = tolerant ? solve_tolerant(data, i, j, tolerance) : solve_realizable(data, i, j);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(candidates.size()); ++c) body(c);
  } else {
    for (std::size_t c = 0; c < candidates.size(); ++c) body(c);
  }
  PairSearch s;
  s.lp_count = candidates.size();
  for (auto& o : outcomes) {
    if (o.feasible) s.feasible.emplace_back(o.record.i, o.record.j);
    s.records.push_back(std::move(o.record));
  }
  s.r_before_prune = s.feasible.size();
  s.minimal = prune_minimal(s.feasible);
  for (const auto& p : s.minimal) {
    for (const auto& r : s.records) {
      if (r.i == p.first && r.j == p.second) {
        s.minimal_seps.push_back(r.sep);
        break;
      }
    }
  }
  sort_records(s.records);
  return s;
}

// Realizable feasibility is monotone: widening the gap (smaller i, larger j)
// only removes samples. So the feasible set is described by j_min(i), which is
// nondecreasing in i, and the minimal pairs are its strict steps.
void finish_frontier(PairSearch& s, int m, const std::vector<int>& jmin,
                     std::vector<LinearSeparator>& seps) {
  for (int i = 0; i + 1 < m; ++i) {
    if (jmin[i] >= m) continue;
    s.r_before_prune += static_cast<std::size_t>(m - jmin[i]);
    const bool dominated = jmin[i + 1] == jmin[i];
    if (!dominated) {
      s.minimal.emplace_back(i, jmin[i]);
      s.minimal_seps.push_back(std::move(seps[i]));
    }
  }
  sort_records(s.records);
}

PairSearch search_staircase(const LocatedSamples& data, int m) {
  PairSearch s;
  std::vector<int> jmin(m, m);
  std::vector<LinearSeparator> seps(m);
  int j = 1;
  for (int i = 0; i + 1 < m; ++i) {
    j = std::max(j, i + 1);
    while (j < m) {
      PairOutcome o = solve_realizable(data, i, j);
      ++s.lp_count;
      const bool ok = o.feasible;
      if (ok) seps[i] = o.record.sep;
      s.records.push_back(std::move(o.record));
      if (ok) break;
      ++j;
    }
    if (j >= m) break;  // no later i can be feasible either
    jmin[i] = j;
  }
  finish_frontier(s, m, jmin, seps);
  return s;
}

PairSearch search_parallel(const LocatedSamples& data, int m) {
  PairSearch s;
  std::vector<int> jmin(m, m);
  std::vector<LinearSeparator> seps(m);
  std::vector<std::vector<PairRecord>> per_i(m);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < m - 1; ++i) {
    int lo = i + 1, hi = m;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      PairOutcome o = solve_realizable(data, i, mid);
      if (o.feasible) {
        hi = mid;
        seps[i] = o.record.sep;
      } else {
        lo = mid + 1;
      }
      per_i[i].push_back(std::move(o.record));
    }
    jmin[i] = hi;
  }
  for (auto& v : per_i) {
    s.lp_count += v.size();
    for (auto& r : v) s.records.push_back(std::move(r));
  }
  finish_frontier(s, m, jmin, seps);
  return s;
}

TrainResult run_training(const ComparisonOracle& oracle, const FeatureMap& map,
                         const TrainConfig& config, const SampleSource& source, int m,
                         Provenance prov, bool tolerant_mode) {
  if (map.n() != oracle.n()) {
    throw InputError("feature map n=" + std::to_string(map.n()) + " does not match oracle n=" +
                     std::to_string(oracle.n()));
  }
  if (m < 1) throw InputError("landmark count must be >= 1");
  const std::size_t n2 = config.train_set_size_override
                             ? *config.train_set_size_override
                             : train_set_size(m, config.eps, config.delta, map.dim(),
                                              config.sample_constant);
  if (n2 < 1) throw InputError("training set size must be >= 1");

  const std::uint64_t q0 = oracle.query_count();
  Sampled sampled = draw_and_locate(oracle, map, m, n2, source, config.seed);

  // With fewer than one tolerated mistake the additive rule is exact feasibility.
  const bool tolerant = tolerant_mode && std::floor(prov.tolerance * static_cast<double>(n2)) >= 1.0;

  PairSearch search;
  if (config.adjacent_only || tolerant || config.kernel == PairKernel::kSerialReference) {
    std::vector<PairIndex> candidates;
    for (int i = 0; i + 1 < m; ++i) {
      if (config.adjacent_only) {
        candidates.emplace_back(i, i + 1);
      } else {
        for (int j = i + 1; j < m; ++j) candidates.emplace_back(i, j);
      }
    }
    const bool parallel = config.kernel != PairKernel::kSerialReference;
    search = search_listed(sampled.located, candidates, tolerant, prov.tolerance, parallel);
  } else if (config.kernel == PairKernel::kStaircase) {
    search = search_staircase(sampled.located, m);
  } else {
    search = search_parallel(sampled.located, m);
  }

  prov.m = m;
  prov.train_size = n2;
  prov.unique_train_masks = sampled.located.masks.size();
  prov.sample_constant = config.sample_constant;
  prov.adjacent_only = config.adjacent_only;
  prov.seed = config.seed;
  prov.eps = config.eps;
  prov.delta = config.delta;
  prov.r_before_prune = search.r_before_prune;
  prov.query_count = oracle.query_count() - q0;

  TrainResult result;
  result.comparator.map = map;
  result.comparator.landmarks = std::move(sampled.landmarks);
  result.comparator.pairs = std::move(search.minimal);
  result.comparator.separators = std::move(search.minimal_seps);
  result.comparator.provenance = std::move(prov);
  result.samples = std::move(sampled.located);
  result.records = std::move(search.records);
  result.lp_count = search.lp_count;
  if (result.comparator.pairs.size() != result.comparator.separators.size()) {
    throw InvariantError("pair and separator lists diverged");
  }
  return result;
}

void check_eps_delta(const TrainConfig& c) {
  if (!(c.eps > 0 && c.eps < 1)) throw InputError("eps must lie in (0, 1)");
  if (!(c.delta > 0 && c.delta < 1)) throw InputError("delta must lie in (0, 1)");
  if (c.landmark_count_override && *c.landmark_count_override < 1) {
    throw InputError("landmark count override must be >= 1");
  }
}

}  // namespace

TrainResult train_multiplicative(const ComparisonOracle& oracle, const FeatureMap& map,
                                 const TrainConfig& config, const SampleSource& source) {
  check_eps_delta(config);
  const auto* mode = std::get_if<Multiplicative>(&config.mode);
  if (!mode) throw InputError("train_multiplicative needs a multiplicative mode");
  if (!(mode->alpha >= 1.0)) throw InputError("alpha must be >= 1");
  const int m = config.landmark_count_override ? *config.landmark_count_override
                                               : landmark_count(config.eps, config.delta);
  Provenance prov;
  prov.mode = "multiplicative";
  prov.alpha = mode->alpha;
  return run_training(oracle, map, config, source, m, std::move(prov), false);
}

TrainResult train_additive(const ComparisonOracle& oracle, const TrainConfig& config,
                           const SampleSource& source) {
  check_eps_delta(config);
  const auto* mode = std::get_if<Additive>(&config.mode);
  if (!mode) throw InputError("train_additive needs an additive mode");
  if (!(mode->beta > 0.0 && mode->beta < 1.0)) throw InputError("beta must lie in (0, 1)");
  if (mode->degree_cap && *mode->degree_cap < 1) throw InputError("degree cap must be >= 1");
  const int n = oracle.n();
  const int m = config.landmark_count_override ? *config.landmark_count_override
                                               : landmark_count(config.eps, config.delta);
  Provenance prov;
  prov.mode = "additive";
  prov.beta = mode->beta;
  prov.degree_cap = mode->degree_cap;
  prov.gamma = additive_gamma(mode->beta, config.eps, config.delta);
  prov.paper_degree = additive_paper_degree(prov.gamma);
  double used = std::min(prov.paper_degree, static_cast<double>(n));
  if (mode->degree_cap) {
    prov.cap_binding = *mode->degree_cap < used;
    used = std::min(used, static_cast<double>(*mode->degree_cap));
  }
  prov.used_degree = static_cast<int>(used);
  const double dim = binomial_sum(n, 0, prov.used_degree);
  if (dim > kMaxPolyDim) {
    throw CapacityError("paper degree k=" + std::to_string(static_cast<long long>(prov.paper_degree)) +
                            " gives parity dimension " + std::to_string(dim) +
                            " above the limit; pass a degree cap",
                        dim);
  }
  prov.tolerance = config.eps / (4.0 * static_cast<double>(m) * m);
  const FeatureMap map = FeatureMap::parity_degree(n, prov.used_degree);
  return run_training(oracle, map, config, source, m, std::move(prov), true);
}

int firing_pair(const Comparator& cmp, const SubsetMask& s, const SubsetMask& t) {
  if (cmp.pairs.empty()) return -1;
  const std::vector<double> xs = cmp.map.embed(s);
  const std::vector<double> xt = cmp.map.embed(t);
  for (std::size_t p = 0; p < cmp.pairs.size(); ++p) {
    const LinearSeparator& sep = cmp.separators[p];
    if (classify(sep, xs) == Side::kNegative && classify(sep, xt) == Side::kPositive) {
      return static_cast<int>(p);
    }
  }
  return -1;
}

bool predict(const Comparator& cmp, const SubsetMask& s, const SubsetMask& t) {
  return firing_pair(cmp, s, t) >= 0;
}

}  // namespace cmpl
