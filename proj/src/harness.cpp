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

#include "cmpl/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "cmpl/errors.hpp"
#include "cmpl/rng.hpp"
#include "json.hpp"

namespace cmpl {

bool is_separated(const Separation& sep, double lo, double hi) {
  if (sep.kind == SeparationKind::kAdditive) return lo + sep.value <= hi;
  return lo < hi && !values_equal(lo, hi) && value_leq(sep.value * lo, hi);
}

namespace {

struct Tally {
  std::uint64_t miss = 0, separated = 0, both = 0;
};

void score_pair(const Comparator& cmp, const SetFunction& truth, const Separation& sep,
                const SubsetMask& a, const SubsetMask& b, Tally& t) {
  const double fa = truth.eval(a), fb = truth.eval(b);
  const bool swap = fa > fb;
  const SubsetMask& lo = swap ? b : a;
  const SubsetMask& hi = swap ? a : b;
  const bool forward = predict(cmp, lo, hi);
  const bool backward = predict(cmp, hi, lo);
  if (forward && backward) ++t.both;
  if (is_separated(sep, std::min(fa, fb), std::max(fa, fb))) {
    ++t.separated;
    if (!forward) ++t.miss;
  }
}

ErrorEstimate finish(const Comparator& cmp, std::uint64_t trials, const Tally& t) {
  ErrorEstimate e;
  e.trials = trials;
  e.miss_count = t.miss;
  e.separated_count = t.separated;
  e.both_fire_count = t.both;
  e.query_count = cmp.provenance.query_count;
  if (t.separated == 0) {
    e.vacuous = true;
    e.conditional_error = std::numeric_limits<double>::quiet_NaN();
    e.std_error = std::numeric_limits<double>::quiet_NaN();
  } else {
    const double p = static_cast<double>(t.miss) / static_cast<double>(t.separated);
    e.conditional_error = p;
    e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(t.separated));
  }
  return e;
}

void check_width(const Comparator& cmp, const SetFunction& truth) {
  if (cmp.map.n() != truth.n()) {
    throw InputError("comparator n=" + std::to_string(cmp.map.n()) +
                     " does not match function n=" + std::to_string(truth.n()));
  }
}

}  // namespace

ErrorEstimate measure_error(const Comparator& cmp, const SetFunction& truth,
                            const SampleSource& dist, const Separation& sep,
                            std::uint64_t trials, std::uint64_t seed) {
  check_width(cmp, truth);
  Rng rng(seed);
  Tally total;
  constexpr std::uint64_t kBlock = 4096;
  std::vector<SubsetMask> a, b;
  for (std::uint64_t done = 0; done < trials; done += kBlock) {
    const std::uint64_t len = std::min(kBlock, trials - done);
    a.clear();
    b.clear();
    for (std::uint64_t t = 0; t < len; ++t) {
      a.push_back(dist(rng));
      b.push_back(dist(rng));
    }
    std::uint64_t miss = 0, separated = 0, both = 0;
#pragma omp parallel for schedule(static) reduction(+ : miss, separated, both)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(len); ++t) {
      Tally local;
      score_pair(cmp, truth, sep, a[t], b[t], local);
      miss += local.miss;
      separated += local.separated;
      both += local.both;
    }
    total.miss += miss;
    total.separated += separated;
    total.both += both;
  }
  return finish(cmp, trials, total);
}

ErrorEstimate measure_error_exhaustive(const Comparator& cmp, const SetFunction& truth,
                                       const Separation& sep) {
  check_width(cmp, truth);
  const int n = truth.n();
  if (n > 12) throw CapacityError("exhaustive evaluation is limited to n <= 12", n);
  const std::int64_t count = std::int64_t{1} << n;
  std::uint64_t miss = 0, separated = 0, both = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : miss, separated, both)
  for (std::int64_t x = 0; x < count; ++x) {
    Tally local;
    const SubsetMask a = SubsetMask::from_bits(n, x);
    for (std::int64_t y = 0; y < count; ++y) {
      score_pair(cmp, truth, sep, a, SubsetMask::from_bits(n, y), local);
    }
    miss += local.miss;
    separated += local.separated;
    both += local.both;
  }
  return finish(cmp, static_cast<std::uint64_t>(count * count), Tally{miss, separated, both});
}

std::vector<SweepCell> sweep_cells(const SweepSpec& spec) {
  if (spec.n_values.empty() || spec.eps_values.empty() || spec.seeds.empty()) {
    throw InputError("sweep needs at least one n, one eps and one seed");
  }
  std::vector<std::optional<std::size_t>> sizes;
  if (spec.train_sizes.empty()) sizes.push_back(std::nullopt);
  for (auto s : spec.train_sizes) sizes.push_back(s);
  std::vector<int> caps = spec.degree_caps;
  if (spec.class_tag != ClassTag::kSubmodularAdditive || caps.empty()) caps = {1};

  std::vector<SweepCell> cells;
  for (int n : spec.n_values)
    for (double eps : spec.eps_values)
      for (const auto& size : sizes)
        for (int cap : caps) cells.push_back({cells.size(), n, eps, size, cap});
  return cells;
}

SetFunctionPtr sweep_target(const SweepSpec& spec, int n, std::uint64_t row_seed) {
  const std::uint64_t s = mix_seed(row_seed, 1);
  const std::string& g = spec.generator;
  if (g == "coverage") {
    auto f = gen_coverage(n, spec.universe, spec.density, s);
    return spec.rescale ? rescale_to_unit(*f) : f;
  }
  if (g == "modular") return gen_modular(n, s);
  if (g == "cut") return gen_graph_cut(n, spec.edge_prob, false, s);
  if (g == "interaction") return gen_interaction(n, spec.degree, spec.density, s);
  if (g == "fourier") return gen_fourier(n, spec.degree, spec.terms, s);
  if (g == "xos") return gen_xos(n, spec.trees, s);
  if (g == "curvature") {
    return gen_curvature_shift(gen_coverage(n, spec.universe, spec.density, s), spec.kappa);
  }
  throw InputError("unknown sweep generator '" + g + "'");
}

namespace {

std::vector<SubsetMask> fourier_support_of(const SetFunction& f) {
  if (const auto* p = std::get_if<FourierParams>(&f.params())) return p->support;
  if (std::holds_alternative<GraphCutParams>(f.params())) {
    return std::get<FourierParams>(cut_to_fourier(f)->params()).support;
  }
  throw InputError("the fourier class needs a fourier or cut target");
}

}  // namespace

SweepRow run_cell(const SweepSpec& spec, const SweepCell& cell, std::uint64_t seed) {
  SweepRow row;
  row.cell = cell;
  row.seed = seed;
  row.row_seed = mix_seed(seed, cell.index);
  const auto start = std::chrono::steady_clock::now();
  try {
    const SetFunctionPtr target = sweep_target(spec, cell.n, row.row_seed);
    ComparisonOracle oracle(target);
    const SampleSource source = product_source(cell.n, spec.inclusion_p);

    TrainConfig config;
    config.eps = cell.eps;
    config.delta = spec.delta;
    config.landmark_count_override = spec.landmarks;
    config.train_set_size_override = cell.train_size;
    config.sample_constant = spec.sample_constant;
    config.adjacent_only = spec.adjacent_only;
    config.seed = mix_seed(row.row_seed, 2);
    config.kernel = spec.kernel;

    TrainResult trained;
    if (spec.class_tag == ClassTag::kSubmodularAdditive) {
      config.mode = Additive{spec.beta, cell.degree_cap};
      row.separation = Separation::additive(spec.beta);
      trained = train_additive(oracle, config, source);
    } else {
      ClassParams params;
      params.n = cell.n;
      params.kappa = spec.kappa;
      params.trees = spec.trees;
      params.xi = spec.xi;
      params.k = spec.degree;
      params.eps = cell.eps;
      if (spec.class_tag == ClassTag::kFourier) params.support = fourier_support_of(*target);
      const MapSelection sel = select_map(spec.class_tag, params);
      const double alpha = spec.alpha.value_or(sel.separation);
      config.mode = Multiplicative{alpha};
      row.separation = Separation::multiplicative(alpha);
      trained = train_multiplicative(oracle, sel.map, config, source);
    }
    const Comparator& cmp = trained.comparator;
    row.m = cmp.provenance.m;
    row.train_size = cmp.provenance.train_size;
    row.unique_train = cmp.provenance.unique_train_masks;
    row.used_degree = cmp.provenance.used_degree;
    row.r_before_prune = cmp.provenance.r_before_prune;
    row.r_size = cmp.pairs.size();
    row.estimate =
        measure_error(cmp, *target, source, row.separation, spec.trials, mix_seed(row.row_seed, 3));
  } catch (const CapacityError& e) {
    row.status = "capacity";
    row.message = e.what();
  } catch (const InputError& e) {
    row.status = "input";
    row.message = e.what();
  }
  row.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.jobs < 1) throw InputError("jobs must be >= 1");
  const std::vector<SweepCell> cells = sweep_cells(spec);
  const std::size_t per = spec.seeds.size();
  std::vector<SweepRow> rows(cells.size() * per);
#pragma omp parallel for num_threads(spec.jobs) schedule(dynamic, 1)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows.size()); ++r) {
    rows[r] = run_cell(spec, cells[r / per], spec.seeds[r % per]);
  }
  return rows;
}

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string sep_kind(const Separation& s) {
  return s.kind == SeparationKind::kAdditive ? "additive" : "multiplicative";
}

}  // namespace

std::string sweep_csv_header(bool wall_time) {
  std::string h =
      "cell,seed,row_seed,n,eps,train_size_override,degree_cap,status,m,train_size,"
      "unique_train,used_degree,separation_kind,separation,trials,separated_count,miss_count,"
      "conditional_error,std_error,vacuous,both_fire_count,query_count,r_before_prune,r_size,"
      "message";
  if (wall_time) h += ",wall_ms";
  return h;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool wall_time) {
  out << sweep_csv_header(wall_time) << '\n';
  for (const auto& r : rows) {
    const auto& e = r.estimate;
    out << r.cell.index << ',' << r.seed << ',' << r.row_seed << ',' << r.cell.n << ','
        << num(r.cell.eps) << ',' << (r.cell.train_size ? std::to_string(*r.cell.train_size) : "")
        << ',' << r.cell.degree_cap << ',' << r.status << ',' << r.m << ',' << r.train_size << ','
        << r.unique_train << ',' << r.used_degree << ',' << sep_kind(r.separation) << ','
        << num(r.separation.value) << ',' << e.trials << ',' << e.separated_count << ','
        << e.miss_count << ',' << num(e.conditional_error) << ',' << num(e.std_error) << ','
        << (e.vacuous ? 1 : 0) << ',' << e.both_fire_count << ',' << e.query_count << ','
        << r.r_before_prune << ',' << r.r_size << ',' << csv_quote(r.message);
    if (wall_time) out << ',' << num(r.wall_ms);
    out << '\n';
  }
}

void write_sweep_long_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "cell,seed,n,eps,train_size,degree_cap,metric,value\n";
  for (const auto& r : rows) {
    if (r.status != "ok") continue;
    const auto& e = r.estimate;
    const double trials = static_cast<double>(e.trials);
    const std::pair<const char*, double> metrics[] = {
        {"conditional_error", e.conditional_error},
        {"std_error", e.std_error},
        {"separated_fraction", trials > 0 ? e.separated_count / trials : std::nan("")},
        {"both_fire_rate", trials > 0 ? e.both_fire_count / trials : std::nan("")},
        {"query_count", static_cast<double>(e.query_count)},
    };
    for (const auto& [name, value] : metrics) {
      out << r.cell.index << ',' << r.seed << ',' << r.cell.n << ',' << num(r.cell.eps) << ','
          << r.train_size << ',' << r.cell.degree_cap << ',' << name << ',' << num(value) << '\n';
    }
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows, bool wall_time) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    const auto& e = r.estimate;
    nlohmann::ordered_json j;
    j["cell"] = r.cell.index;
    j["seed"] = r.seed;
    j["row_seed"] = r.row_seed;
    j["n"] = r.cell.n;
    j["eps"] = r.cell.eps;
    j["train_size_override"] =
        r.cell.train_size ? nlohmann::ordered_json(*r.cell.train_size) : nlohmann::ordered_json();
    j["degree_cap"] = r.cell.degree_cap;
    j["status"] = r.status;
    j["message"] = r.message;
    j["m"] = r.m;
    j["train_size"] = r.train_size;
    j["unique_train"] = r.unique_train;
    j["used_degree"] = r.used_degree;
    j["separation_kind"] = sep_kind(r.separation);
    j["separation"] = r.separation.value;
    j["trials"] = e.trials;
    j["separated_count"] = e.separated_count;
    j["miss_count"] = e.miss_count;
    j["conditional_error"] = e.vacuous ? nlohmann::ordered_json() : nlohmann::ordered_json(e.conditional_error);
    j["std_error"] = e.vacuous ? nlohmann::ordered_json() : nlohmann::ordered_json(e.std_error);
    j["vacuous"] = e.vacuous;
    j["both_fire_count"] = e.both_fire_count;
    j["query_count"] = e.query_count;
    j["r_before_prune"] = r.r_before_prune;
    j["r_size"] = r.r_size;
    if (wall_time) j["wall_ms"] = r.wall_ms;
    doc["rows"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace cmpl
