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

// Command-line driver: gen, train, predict, eval, sweep, querylearn.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cmpl/comparator.hpp"
#include "cmpl/errors.hpp"
#include "cmpl/harness.hpp"
#include "cmpl/io.hpp"
#include "cmpl/querylearn.hpp"
#include "cmpl/setfn.hpp"

namespace {

using namespace cmpl;

constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvariant = 4;

std::uint64_t need_seed(const std::optional<std::uint64_t>& seed, const char* verb) {
  if (!seed) throw InputError(std::string(verb) + " draws random numbers and needs --seed");
  return *seed;
}

SubsetMask parse_set(const std::string& text, int n) {
  SubsetMask s(n);
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int i = -1;
    try {
      i = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || i < 0 || i >= n) {
      throw InputError("bad element '" + tok + "' in set '" + text + "' (n=" + std::to_string(n) + ")");
    }
    s.set(i);
  }
  return s;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string graph = "random";
  int universe = 40;
  double density = 0.2;
  std::optional<int> truncate;
  bool rescale = false;
  double edge_prob = 0.3;
  bool unit_weights = false;
  int degree = 2;
  int terms = 8;
  int trees = 3;
  double kappa = 0.5;
  double p = 0.5;
  int k = 1;
};

void print_verification(const SetFunction& f, SetProperty prop, std::uint64_t seed) {
  VerifyOptions opt;
  if (f.n() > kExhaustiveVerifyMaxN) {
    opt.sampled = true;
    opt.trials = 20000;
    opt.seed = seed;
  }
  const VerifyResult r = verify_class(f, prop, opt);
  std::cout << to_string(prop) << ": " << (r.pass ? "verified" : "FAILED") << " ("
            << (opt.sampled ? "sampled" : "exhaustive") << ", " << r.checked << " checks)";
  if (!r.pass) {
    std::cout << " witness";
    for (const auto& w : r.witness) std::cout << ' ' << w.to_string();
  }
  std::cout << '\n';
}

int run_gen(const GenArgs& a) {
  // Validate generator parameters first so degenerate input is named directly.
  if (a.kind == "coverage" && !(a.density > 0.0 && a.density <= 1.0)) {
    throw InputError("coverage --density must be in (0, 1]; density " + fmt(a.density) +
                     " gives a degenerate all-zero function");
  }
  if (a.out.empty()) throw InputError("gen needs --out");
  SetFunctionPtr f;
  if (a.kind == "cut" && a.graph.rfind("path", 0) == 0) {
    const std::string digits = a.graph.substr(4);
    int n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size()) n = 0;
    if (n < 2) throw InputError("path graph needs at least 2 vertices, e.g. --graph path3");
    if (a.n && *a.n != n) throw InputError("--n disagrees with --graph " + a.graph);
    f = make_path_graph_cut(n);
  } else {
    if (a.kind == "cut" && a.graph != "random") {
      throw InputError("unknown --graph '" + a.graph + "'; use random or pathN");
    }
    if (!a.n) throw InputError("gen " + a.kind + " needs --n");
    const int n = *a.n;
    if (n < 1 || n > SubsetMask::kMaxN) throw InputError("--n out of range");
    const std::uint64_t seed = need_seed(a.seed, "gen");
    if (a.kind == "coverage") {
      f = a.truncate ? gen_truncated_coverage(n, a.universe, a.density, *a.truncate, seed)
                     : gen_coverage(n, a.universe, a.density, seed);
      if (a.rescale) f = rescale_to_unit(*f);
    } else if (a.kind == "xos") {
      f = gen_xos(n, a.trees, seed);
    } else if (a.kind == "cut") {
      f = gen_graph_cut(n, a.edge_prob, a.unit_weights, seed);
    } else if (a.kind == "fourier") {
      f = gen_fourier(n, a.degree, a.terms, seed);
    } else if (a.kind == "interaction") {
      f = gen_interaction(n, a.degree, a.density, seed);
    } else if (a.kind == "modular") {
      f = gen_modular(n, seed);
    } else if (a.kind == "curvature") {
      f = gen_curvature_shift(gen_coverage(n, a.universe, a.density, seed), a.kappa);
    } else if (a.kind == "disjunction") {
      f = gen_disjunction(n, a.p, seed);
    } else if (a.kind == "kdnf") {
      f = gen_kdnf(n, a.k, a.terms, seed);
    } else {
      throw InputError("unknown function class '" + a.kind + "'");
    }
  }
  write_text_file(a.out, function_to_json(*f).dump(2) + "\n");
  std::cout << "kind=" << to_string(f->kind()) << " n=" << f->n() << " out=" << a.out << '\n';
  const std::uint64_t vseed = a.seed.value_or(0);
  switch (f->kind()) {
    case FunctionKind::kCoverage:
    case FunctionKind::kCurvatureShift:
      print_verification(*f, SetProperty::kMonotone, vseed);
      print_verification(*f, SetProperty::kSubmodular, vseed);
      break;
    case FunctionKind::kGraphCut:
      print_verification(*f, SetProperty::kSubmodular, vseed);
      break;
    case FunctionKind::kXos:
      print_verification(*f, SetProperty::kMonotone, vseed);
      print_verification(*f, SetProperty::kSubadditive, vseed);
      break;
    default:
      break;
  }
  return 0;
}

// ---- train ----------------------------------------------------------------

struct TrainArgs {
  std::string fn_path;
  std::string class_name;
  double eps = 0.1;
  double delta = 0.1;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<double> alpha;
  double beta = 0.3;
  std::optional<int> degree_cap;
  std::optional<int> landmarks;
  std::optional<std::size_t> train_size;
  double sample_constant = 1.0;
  bool adjacent_only = false;
  std::string support_file;
  double p = 0.5;
  double kappa = 0.0;
  int trees = 1;
  double xi = 1.0;
  int k = 1;
  double xos_constant = 1.0;
  std::string kernel = "staircase";
};

std::vector<SubsetMask> read_support(const std::string& path, int n) {
  const Json j = read_json_file(path);
  std::vector<SubsetMask> support;
  if (j.is_array()) {
    for (const auto& s : j) support.push_back(subset_from_json(s, n));
    return support;
  }
  const SetFunctionPtr f = function_from_json(j);
  if (f->n() != n) throw InputError("support file n does not match the function");
  if (f->kind() == FunctionKind::kGraphCut) return std::get<FourierParams>(cut_to_fourier(*f)->params()).support;
  if (f->kind() != FunctionKind::kFourierSparse) {
    throw InputError("support file must be a list of sets or a fourier/cut function");
  }
  return std::get<FourierParams>(f->params()).support;
}

int run_train(const TrainArgs& a) {
  const ClassTag tag = class_tag_from_string(a.class_name);
  const PairKernel kernel = pair_kernel_from_string(a.kernel);
  if (a.out.empty()) throw InputError("train needs --out");
  const std::uint64_t seed = need_seed(a.seed, "train");
  if (tag == ClassTag::kFourier && a.support_file.empty()) {
    throw InputError("--class fourier needs --support-file");
  }
  if (tag == ClassTag::kSubmodularAdditive && a.p != 0.5) {
    throw InputError("the additive learner assumes the uniform distribution (--p 0.5)");
  }
  const SetFunctionPtr f = function_from_json(read_json_file(a.fn_path));
  const int n = f->n();
  ComparisonOracle oracle(f);
  const SampleSource source = product_source(n, a.p);

  TrainConfig config;
  config.eps = a.eps;
  config.delta = a.delta;
  config.landmark_count_override = a.landmarks;
  config.train_set_size_override = a.train_size;
  config.sample_constant = a.sample_constant;
  config.adjacent_only = a.adjacent_only;
  config.seed = seed;
  config.kernel = kernel;

  TrainResult result;
  if (tag == ClassTag::kSubmodularAdditive) {
    config.mode = Additive{a.beta, a.degree_cap};
    result = train_additive(oracle, config, source);
    const Provenance& v = result.comparator.provenance;
    std::cout << "gamma=" << fmt(v.gamma) << " paper_degree=" << fmt(v.paper_degree)
              << " used_degree=" << v.used_degree << (v.cap_binding ? " (capped)" : "")
              << " tolerance=" << fmt(v.tolerance) << '\n';
  } else {
    ClassParams params;
    params.n = n;
    params.kappa = a.kappa;
    params.trees = a.trees;
    params.xi = a.xi;
    params.k = a.k;
    params.eps = a.eps;
    params.xos_constant = a.xos_constant;
    if (tag == ClassTag::kFourier) params.support = read_support(a.support_file, n);
    const MapSelection sel = select_map(tag, params);
    config.mode = Multiplicative{a.alpha.value_or(sel.separation)};
    result = train_multiplicative(oracle, sel.map, config, source);
  }
  const Comparator& cmp = result.comparator;
  const Provenance& v = cmp.provenance;
  write_text_file(a.out, comparator_to_json(cmp).dump(2) + "\n");
  std::cout << "map=" << to_string(cmp.map.kind()) << " dim=" << cmp.map.dim();
  if (v.mode == "multiplicative") std::cout << " alpha=" << fmt(v.alpha);
  else std::cout << " beta=" << fmt(v.beta);
  std::cout << '\n'
            << "m=" << v.m << " train_size=" << v.train_size << " unique=" << v.unique_train_masks
            << '\n'
            << "R_before_prune=" << v.r_before_prune << " R_after_prune=" << cmp.pairs.size()
            << '\n'
            << "query_count=" << v.query_count << '\n';
  return 0;
}

// ---- predict --------------------------------------------------------------

int run_predict(const std::string& cmp_path, const std::string& s, const std::string& t) {
  const Comparator cmp = comparator_from_json(read_json_file(cmp_path));
  const SubsetMask a = parse_set(s, cmp.map.n());
  const SubsetMask b = parse_set(t, cmp.map.n());
  const int fired = firing_pair(cmp, a, b);
  std::cout << (fired >= 0 ? 1 : 0);
  if (fired >= 0) {
    std::cout << " pair=(" << cmp.pairs[fired].first << "," << cmp.pairs[fired].second << ")";
  }
  std::cout << '\n';
  return 0;
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string cmp_path;
  std::string fn_path;
  std::uint64_t trials = 10000;
  std::optional<std::uint64_t> seed;
  bool exhaustive = false;
  double p = 0.5;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string csv;
};

int run_eval(const EvalArgs& a) {
  if (!a.exhaustive) need_seed(a.seed, "eval");
  if (a.alpha && a.beta) throw InputError("pass at most one of --alpha and --beta");
  const Comparator cmp = comparator_from_json(read_json_file(a.cmp_path));
  const SetFunctionPtr f = function_from_json(read_json_file(a.fn_path));
  if (cmp.map.n() != f->n()) {
    throw InputError("comparator n=" + std::to_string(cmp.map.n()) + " but function n=" +
                     std::to_string(f->n()));
  }
  Separation sep = cmp.provenance.mode == "additive" ? Separation::additive(cmp.provenance.beta)
                                                      : Separation::multiplicative(cmp.provenance.alpha);
  if (a.alpha) sep = Separation::multiplicative(*a.alpha);
  if (a.beta) sep = Separation::additive(*a.beta);
  const ErrorEstimate e = a.exhaustive
                              ? measure_error_exhaustive(cmp, *f, sep)
                              : measure_error(cmp, *f, product_source(f->n(), a.p), sep, a.trials,
                                              *a.seed);
  const double frac = e.trials ? static_cast<double>(e.separated_count) / e.trials : std::nan("");
  std::cout << "trials=" << e.trials << '\n'
            << "separated_count=" << e.separated_count << " separated_fraction=" << fmt(frac) << '\n'
            << "miss_count=" << e.miss_count << '\n'
            << "conditional_error=" << fmt(e.conditional_error)
            << (e.vacuous ? " (vacuous: no separated pairs)" : "") << '\n'
            << "std_error=" << fmt(e.std_error) << '\n'
            << "both_fire_count=" << e.both_fire_count << '\n';
  if (!a.csv.empty()) {
    std::ostringstream out;
    out << "trials,separated_count,miss_count,conditional_error,std_error,vacuous,both_fire_count,"
           "query_count\n"
        << e.trials << ',' << e.separated_count << ',' << e.miss_count << ','
        << fmt(e.conditional_error) << ',' << fmt(e.std_error) << ',' << (e.vacuous ? 1 : 0) << ','
        << e.both_fire_count << ',' << e.query_count << '\n';
    write_text_file(a.csv, out.str());
  }
  return 0;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::string spec_path;
  std::string out_csv;
  std::string out_json;
  std::string out_long;
  int jobs = 1;
  bool no_wall_time = false;
};

int run_sweep_cmd(const SweepArgs& a) {
  if (a.jobs < 1) throw InputError("--jobs must be >= 1");
  if (a.out_csv.empty() && a.out_json.empty() && a.out_long.empty()) {
    throw InputError("sweep needs at least one of --out-csv, --out-json, --out-long");
  }
  SweepSpec spec = sweep_spec_from_json(read_json_file(a.spec_path));
  spec.jobs = a.jobs;
  spec.wall_time = !a.no_wall_time;
  const auto rows = run_sweep(spec);
  if (!a.out_csv.empty()) {
    std::ostringstream out;
    write_sweep_csv(out, rows, spec.wall_time);
    write_text_file(a.out_csv, out.str());
  }
  if (!a.out_json.empty()) {
    std::ostringstream out;
    write_sweep_json(out, rows, spec.wall_time);
    write_text_file(a.out_json, out.str());
  }
  if (!a.out_long.empty()) {
    std::ostringstream out;
    write_sweep_long_csv(out, rows);
    write_text_file(a.out_long, out.str());
  }
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.status != "ok";
  std::cout << "rows=" << rows.size() << " failed_cells=" << failed << '\n';
  return 0;
}

// ---- querylearn -----------------------------------------------------------

struct QueryArgs {
  std::string fn_path;
  std::string mode = "buckets";
  int k = 1;
  int alpha = 1;
  std::string out;
};

int run_querylearn(const QueryArgs& a) {
  if (a.mode != "disjunction" && a.mode != "buckets" && a.mode != "buckets-approx") {
    throw InputError("--mode must be disjunction, buckets or buckets-approx");
  }
  const SetFunctionPtr f = function_from_json(read_json_file(a.fn_path));
  ComparisonOracle oracle(f);
  if (a.mode == "disjunction") {
    const SubsetMask support = learn_disjunction(oracle);
    std::cout << "support=" << support.to_string() << '\n'
              << "query_count=" << oracle.query_count() << '\n';
    if (!a.out.empty()) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = f->n();
      j["support"] = subset_to_json(support);
      j["query_count"] = oracle.query_count();
      write_text_file(a.out, j.dump(2) + "\n");
    }
    return 0;
  }
  const BucketPredictor p =
      a.mode == "buckets" ? learn_buckets(oracle, a.k) : learn_buckets_approx(oracle, a.k, a.alpha);
  std::size_t members = 0;
  for (const auto& g : p.groups) members += g.size();
  std::cout << "s=" << p.s << " subsets=" << members << " groups=" << p.groups.size() << '\n'
            << "query_count=" << p.query_count << '\n';
  if (!a.out.empty()) write_text_file(a.out, buckets_to_json(p).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn set functions up to pairwise comparisons."};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a target set function and write it as JSON.");
  g->add_option("class", gen.kind,
                "coverage, xos, cut, fourier, interaction, modular, curvature, disjunction, kdnf")
      ->required();
  g->add_option("--n", gen.n, "Ground set size");
  g->add_option("--seed", gen.seed, "Random seed (required unless the graph is canned)");
  g->add_option("--out", gen.out, "Output function file");
  g->add_option("--graph", gen.graph, "cut only: random or pathN (e.g. path3)");
  g->add_option("--universe", gen.universe, "coverage: universe size");
  g->add_option("--density", gen.density, "coverage/interaction: inclusion density in (0,1]");
  g->add_option("--truncate", gen.truncate, "coverage: unit weights, values capped at this level");
  g->add_flag("--rescale", gen.rescale, "coverage: scale so f(ground set) = 1");
  g->add_option("--edge-prob", gen.edge_prob, "cut: edge probability");
  g->add_flag("--unit-weights", gen.unit_weights, "cut: all edge weights 1");
  g->add_option("--degree", gen.degree, "fourier/interaction: maximum term degree");
  g->add_option("--terms", gen.terms, "fourier/kdnf: number of terms");
  g->add_option("--trees", gen.trees, "xos: number of SUM trees");
  g->add_option("--kappa", gen.kappa, "curvature: curvature in [0,1]");
  g->add_option("--p", gen.p, "disjunction: element inclusion probability");
  g->add_option("--k", gen.k, "kdnf: value range {0..k}");

  TrainArgs tr;
  auto* t = app.add_subcommand("train", "Train a comparator from a function file.");
  t->add_option("function", tr.fn_path, "Function JSON file")->required();
  t->add_option("--class", tr.class_name,
                "modular, submodular, xos, subadditive, curvature, xos-trees, interaction, "
                "fourier, coverage, submodular-additive")
      ->required();
  t->add_option("--eps", tr.eps, "Accuracy in (0,1)");
  t->add_option("--delta", tr.delta, "Confidence in (0,1)");
  t->add_option("--seed", tr.seed, "Random seed (required)");
  t->add_option("--out", tr.out, "Output comparator file");
  t->add_option("--alpha", tr.alpha, "Override the class separation factor");
  t->add_option("--beta", tr.beta, "submodular-additive: additive separation in (0,1)");
  t->add_option("--degree-cap", tr.degree_cap, "submodular-additive: parity degree cap");
  t->add_option("--landmarks", tr.landmarks, "Override the landmark count m");
  t->add_option("--train-size", tr.train_size, "Override the training sample size");
  t->add_option("--sample-constant", tr.sample_constant, "Constant scaling the sample size formula");
  t->add_flag("--adjacent-only", tr.adjacent_only, "Train adjacent landmark pairs only");
  t->add_option("--support-file", tr.support_file,
                "fourier: list of sets, or a fourier/cut function file");
  t->add_option("--p", tr.p, "Element inclusion probability of the sample distribution");
  t->add_option("--kappa", tr.kappa, "curvature: curvature in [0,1]");
  t->add_option("--trees", tr.trees, "xos-trees: number of trees R");
  t->add_option("--xi", tr.xi, "xos-trees: exponent xi");
  t->add_option("--k", tr.k, "interaction: degree k");
  t->add_option("--xos-constant", tr.xos_constant, "xos: constant c in c*sqrt(n)");
  t->add_option("--kernel", tr.kernel, "Pair kernel: serial, staircase or parallel");

  std::string p_cmp, p_s, p_t;
  auto* pr = app.add_subcommand("predict", "Ask a comparator whether f(S) < f(T).");
  pr->add_option("comparator", p_cmp, "Comparator JSON file")->required();
  pr->add_option("--s", p_s, "First set, comma-separated elements (empty for the empty set)")->required();
  pr->add_option("--t", p_t, "Second set, comma-separated elements")->required();

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Measure a comparator's error against ground truth.");
  e->add_option("comparator", ev.cmp_path, "Comparator JSON file")->required();
  e->add_option("function", ev.fn_path, "Function JSON file")->required();
  e->add_option("--trials", ev.trials, "Number of random pairs");
  e->add_option("--seed", ev.seed, "Random seed (required unless --exhaustive)");
  e->add_flag("--exhaustive", ev.exhaustive, "Score every ordered pair (n <= 12)");
  e->add_option("--p", ev.p, "Element inclusion probability of the pair distribution");
  e->add_option("--alpha", ev.alpha, "Override the multiplicative separation");
  e->add_option("--beta", ev.beta, "Override with an additive separation");
  e->add_option("--csv", ev.csv, "Also write the metrics as CSV");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Run a grid of train/eval cells from a JSON spec.");
  s->add_option("spec", sw.spec_path, "Sweep spec JSON file")->required();
  s->add_option("--out-csv", sw.out_csv, "One row per cell and seed");
  s->add_option("--out-json", sw.out_json, "Same rows as JSON");
  s->add_option("--out-long", sw.out_long, "Long-format CSV (metric, value)");
  s->add_option("--jobs", sw.jobs, "Concurrent cells");
  s->add_flag("--no-wall-time", sw.no_wall_time, "Omit the wall_ms column");

  QueryArgs q;
  auto* ql = app.add_subcommand("querylearn", "Learn with membership-style comparison queries.");
  ql->add_option("function", q.fn_path, "Function JSON file")->required();
  ql->add_option("--mode", q.mode, "disjunction, buckets or buckets-approx");
  ql->add_option("--k", q.k, "buckets: value range {0..k}");
  ql->add_option("--alpha", q.alpha, "buckets-approx: integer alpha dividing 2k");
  ql->add_option("--out", q.out, "Output JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*g) return run_gen(gen);
    if (*t) return run_train(tr);
    if (*pr) return run_predict(p_cmp, p_s, p_t);
    if (*e) return run_eval(ev);
    if (*s) return run_sweep_cmd(sw);
    if (*ql) return run_querylearn(q);
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& err) {
    std::cerr << "capacity error: " << err.what() << " (requested " << fmt(err.requested()) << ")\n";
    return kExitCapacity;
  } catch (const InvariantError& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kExitInvariant;
  }
  return kExitInput;
}
