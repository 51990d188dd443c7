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

#include "cmpl/septrain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cmpl/errors.hpp"
#include "cmpl/hinge_lp.hpp"

namespace cmpl {

double TrainingSet::total_count() const {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

void TrainingSet::add(std::span<const double> x, Label label, double count) {
  if (x.size() != dim) throw InputError("training sample has the wrong dimension");
  rows.insert(rows.end(), x.begin(), x.end());
  labels.push_back(label);
  counts.push_back(count);
}

TrainingSet TrainingSet::from_samples(std::span<const LabeledSample> samples) {
  TrainingSet t;
  if (samples.empty()) return t;
  t.dim = samples.front().x.size();
  for (const auto& s : samples) t.add(s.x, s.label);
  return t;
}

double score(const LinearSeparator& sep, std::span<const double> x) {
  if (x.size() != sep.w.size()) {
    throw InputError("classify: feature dimension " + std::to_string(x.size()) +
                     " != separator dimension " + std::to_string(sep.w.size()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += sep.w[i] * x[i];
  return s;
}

Side classify(const LinearSeparator& sep, std::span<const double> x) {
  const double margin = score(sep, x) - sep.theta;
  if (std::fabs(margin) <= kThresholdRelTol * (1.0 + std::fabs(sep.theta))) {
    return Side::kOnThreshold;
  }
  return margin < 0 ? Side::kNegative : Side::kPositive;
}

bool classifies_correctly(const LinearSeparator& sep, std::span<const double> x, Label label) {
  const Side side = classify(sep, x);
  return label == Label::kNegative ? side == Side::kNegative : side == Side::kPositive;
}

double count_errors(const LinearSeparator& sep, const TrainingSet& data) {
  double errors = 0.0;
  for (std::size_t r = 0; r < data.size(); ++r) {
    if (!classifies_correctly(sep, data.row(r), data.labels[r])) errors += data.counts[r];
  }
  return errors;
}

namespace {

LinearSeparator unit_direction(std::size_t dim) {
  LinearSeparator sep;
  sep.w.assign(dim, 0.0);
  sep.w[0] = 1.0;
  return sep;
}

// All samples carry one label: any nonzero w works; push theta past them.
std::optional<LinearSeparator> single_class(const TrainingSet& data) {
  bool has_neg = false, has_pos = false;
  for (Label l : data.labels) (l == Label::kNegative ? has_neg : has_pos) = true;
  if (has_neg && has_pos) return std::nullopt;
  LinearSeparator sep = unit_direction(data.dim);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t r = 0; r < data.size(); ++r) {
    lo = std::min(lo, data.row(r)[0]);
    hi = std::max(hi, data.row(r)[0]);
  }
  sep.theta = has_neg ? hi + 1.0 : lo - 1.0;
  return sep;
}

bool satisfies_margin(const LinearSeparator& sep, const TrainingSet& data) {
  for (std::size_t r = 0; r < data.size(); ++r) {
    const double s = static_cast<double>(data.labels[r]) * (score(sep, data.row(r)) - sep.theta);
    if (s < 1.0 - 1e-7) return false;
    if (!classifies_correctly(sep, data.row(r), data.labels[r])) return false;
  }
  return true;
}

}  // namespace

std::optional<LinearSeparator> train_realizable(const TrainingSet& data) {
  if (data.dim == 0) throw InputError("train_realizable needs feature dimension >= 1");
  if (data.size() == 0) {
    // Feature entries lie in [-1, 1], so x_1 > -2 everywhere.
    LinearSeparator sep = unit_direction(data.dim);
    sep.theta = -2.0;
    sep.vacuous = true;
    return sep;
  }
  if (auto sep = single_class(data)) return sep;

  const double min_count = *std::min_element(data.counts.begin(), data.counts.end());
  HingeLpOptions options;
  options.stop_below = 0.5 * min_count;
  const HingeLpResult lp = solve_hinge_lp(data, options);
  if (!lp.stopped_early && !lp.optimal) throw InvariantError("separator LP hit its iteration cap");
  // Any hinge total below min_count leaves every margin positive; otherwise
  // some sample has margin <= 0 for every (w, theta).
  if (lp.objective >= 0.5 * min_count) return std::nullopt;
  LinearSeparator sep{lp.w, lp.theta, false};
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < data.size(); ++r) {
    min_margin = std::min(min_margin, static_cast<double>(data.labels[r]) *
                                          (score(sep, data.row(r)) - sep.theta));
  }
  if (!(min_margin > 0.0)) throw InvariantError("separator LP reported a nonpositive margin");
  for (double& v : sep.w) v /= min_margin;
  sep.theta /= min_margin;
  if (!satisfies_margin(sep, data)) {
    throw InvariantError("separator LP reported feasibility but the margin check failed");
  }
  return sep;
}

std::optional<LinearSeparator> train_realizable(std::span<const LabeledSample> samples) {
  if (samples.empty()) {
    throw InputError("train_realizable on an empty list needs a dimension; use TrainingSet");
  }
  return train_realizable(TrainingSet::from_samples(samples));
}

TolerantResult train_tolerant(const TrainingSet& data) {
  TolerantResult result;
  if (auto sep = train_realizable(data)) {
    result.sep = *sep;
    result.realizable = true;
    result.error_count = count_errors(result.sep, data);
    const double total = data.total_count();
    result.empirical_error = total > 0 ? result.error_count / total : 0.0;
    return result;
  }

  const HingeLpResult lp = solve_hinge_lp(data);
  std::vector<double> w = lp.w;
  const double wmax = w.empty() ? 0.0 : *std::max_element(w.begin(), w.end(), [](double a, double b) {
    return std::fabs(a) < std::fabs(b);
  });
  if (std::fabs(wmax) < 1e-12) {
    // Degenerate surrogate optimum: fall back to the difference of class means.
    std::vector<double> pos(data.dim, 0.0), neg(data.dim, 0.0);
    double cp = 0.0, cn = 0.0;
    for (std::size_t r = 0; r < data.size(); ++r) {
      auto& acc = data.labels[r] == Label::kPositive ? pos : neg;
      (data.labels[r] == Label::kPositive ? cp : cn) += data.counts[r];
      for (std::size_t i = 0; i < data.dim; ++i) acc[i] += data.counts[r] * data.row(r)[i];
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < data.dim; ++i) {
      w[i] = pos[i] / std::max(cp, 1.0) - neg[i] / std::max(cn, 1.0);
      norm += std::fabs(w[i]);
    }
    if (norm < 1e-12) {
      std::fill(w.begin(), w.end(), 0.0);
      w[0] = 1.0;
    }
  }

  // Threshold sweep along w: sort projections and evaluate every gap.
  struct Proj {
    double p;
    double neg;
    double pos;
  };
  std::vector<Proj> proj(data.size());
  LinearSeparator probe{w, 0.0, false};
  for (std::size_t r = 0; r < data.size(); ++r) {
    const bool positive = data.labels[r] == Label::kPositive;
    proj[r] = {score(probe, data.row(r)), positive ? 0.0 : data.counts[r],
               positive ? data.counts[r] : 0.0};
  }
  std::sort(proj.begin(), proj.end(), [](const Proj& a, const Proj& b) { return a.p < b.p; });

  // Threshold below everything: all positive, so every negative is a mistake.
  double neg_total = 0.0;
  for (const auto& q : proj) neg_total += q.neg;
  double best_err = neg_total;
  double best_theta = proj.front().p - 1.0;
  double neg_left = 0.0, pos_left = 0.0;
  for (std::size_t k = 0; k < proj.size(); ++k) {
    neg_left += proj[k].neg;
    pos_left += proj[k].pos;
    const bool last = k + 1 == proj.size();
    if (!last && proj[k + 1].p == proj[k].p) continue;
    const double theta = last ? proj[k].p + 1.0 : 0.5 * (proj[k].p + proj[k + 1].p);
    const double err = pos_left + (neg_total - neg_left);
    if (err < best_err) {
      best_err = err;
      best_theta = theta;
    }
  }
  result.sep = LinearSeparator{std::move(w), best_theta, false};
  result.error_count = count_errors(result.sep, data);
  const double total = data.total_count();
  result.empirical_error = total > 0 ? result.error_count / total : 0.0;
  return result;
}

TolerantResult train_tolerant(std::span<const LabeledSample> samples, double tolerance) {
  if (!(tolerance >= 0.0 && tolerance < 1.0)) throw InputError("tolerance must be in [0, 1)");
  if (samples.empty()) throw InputError("train_tolerant needs at least one sample");
  return train_tolerant(TrainingSet::from_samples(samples));
}

}  // namespace cmpl
