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

#include "cmpl/hinge_lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>

#include "cmpl/errors.hpp"

namespace cmpl {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kRefactorEvery = 256;

// Sample costs are 1 + kPerturb * u_r with a fixed pseudo-random u_r in [0, 1).
// This breaks the heavy dual degeneracy of +-1 features; a separator at zero
// perturbed hinge still has every margin >= 1.
constexpr double kPerturb = 1e-6;

double perturbation(int r) {
  std::uint64_t z = static_cast<std::uint64_t>(r) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// Columns 0..N-1 are the samples (bounds [0, c_r], cost 1); columns N..N+d are
// identity slacks fixed at zero, which start as the basis and cover the rank
// deficiency when a feature is constant.
class DualSimplex {
 public:
  explicit DualSimplex(const TrainingSet& data)
      : counts_(data.counts),
        n_rows_(static_cast<int>(data.size())),
        dim_(static_cast<int>(data.dim)),
        m_(dim_ + 1),
        x_(data.rows.data(), n_rows_, dim_) {
    sign_.resize(n_rows_);
    cost_.resize(n_rows_);
    for (int r = 0; r < n_rows_; ++r) {
      sign_[r] = static_cast<double>(data.labels[r]);
      cost_[r] = 1.0 + kPerturb * perturbation(r);
    }
    max_count_ = counts_.empty() ? 1.0 : *std::max_element(counts_.begin(), counts_.end());
    at_upper_.assign(n_rows_, 1);  // reduced cost c_r > 0 at pi = 0: dual feasible at the upper bound
    basis_.resize(m_);
    position_.assign(n_rows_ + m_, -1);
    for (int k = 0; k < m_; ++k) {
      basis_[k] = n_rows_ + k;
      position_[n_rows_ + k] = k;
    }
    refactor();
  }

  HingeLpResult run(const HingeLpOptions& options) {
    HingeLpResult result;
    Eigen::VectorXd pi(m_), reduced(n_rows_), rho(m_), alpha_row(n_rows_), col(m_), shift(m_);
    std::vector<Candidate> cands;
    int since_refactor = 0;

    while (true) {
      compute_pi(pi);
      compute_reduced(pi, reduced);
      const double hinge = total_hinge(reduced);
      if (hinge < options.stop_below) {
        result.stopped_early = true;
        break;
      }
      if (result.iterations >= options.max_iterations) break;

      const double feas_tol = 1e-9 * (1.0 + max_count_);
      int leave = -1;
      double worst = feas_tol;
      double sigma = 0.0;
      for (int k = 0; k < m_; ++k) {
        const double ub = upper_bound(basis_[k]);
        if (xb_[k] < -worst) {
          worst = -xb_[k];
          leave = k;
          sigma = 1.0;
        } else if (xb_[k] - ub > worst) {
          worst = xb_[k] - ub;
          leave = k;
          sigma = -1.0;
        }
      }
      if (leave < 0) {
        if (since_refactor > 0) {
          refactor();
          since_refactor = 0;
          continue;
        }
        result.optimal = true;
        break;
      }
      ++result.iterations;

      rho = binv_.row(leave).transpose();
      alpha_row.noalias() = x_ * rho.head(dim_);
      const double rt = rho[dim_];
      const double piv_tol = 1e-9 * (1.0 + rho.cwiseAbs().maxCoeff());
      cands.clear();
      for (int r = 0; r < n_rows_; ++r) {
        if (position_[r] >= 0) continue;
        const double a = sign_[r] * (alpha_row[r] - rt);
        alpha_row[r] = a;
        const double dir = at_upper_[r] ? sigma * a : -sigma * a;
        if (dir <= piv_tol) continue;
        const double d = at_upper_[r] ? std::max(0.0, reduced[r]) : std::max(0.0, -reduced[r]);
        cands.push_back({d / std::fabs(a), std::fabs(a), r});
      }
      if (cands.empty()) throw InvariantError("hinge LP: dual ray in a feasible program");
      std::sort(cands.begin(), cands.end(), [](const Candidate& p, const Candidate& q) {
        if (p.ratio != q.ratio) return p.ratio < q.ratio;
        if (p.abs_alpha != q.abs_alpha) return p.abs_alpha > q.abs_alpha;
        return p.index < q.index;
      });

      // Bound-flipping ratio test: pass breakpoints while the leaving row
      // stays infeasible after the flip.
      double slope = worst;
      std::size_t enter_at = cands.size() - 1;
      for (std::size_t c = 0; c + 1 < cands.size(); ++c) {
        const double drop = cands[c].abs_alpha * counts_[cands[c].index];
        if (slope - drop <= feas_tol) {
          enter_at = c;
          break;
        }
        slope -= drop;
      }
      shift.setZero();
      bool flipped = false;
      for (std::size_t c = 0; c < enter_at; ++c) {
        const int r = cands[c].index;
        const double delta = at_upper_[r] ? -counts_[r] : counts_[r];
        at_upper_[r] ^= 1;
        add_column(r, delta, shift);
        flipped = true;
      }
      if (flipped) xb_.noalias() -= binv_ * shift;

      const int q = cands[enter_at].index;
      col.setZero();
      add_column(q, 1.0, col);
      const Eigen::VectorXd aq = binv_ * col;
      const double target = sigma > 0 ? 0.0 : upper_bound(basis_[leave]);
      const double step = (xb_[leave] - target) / aq[leave];
      const double q_value = (at_upper_[q] ? counts_[q] : 0.0) + step;
      xb_.noalias() -= step * aq;

      const int leaving = basis_[leave];
      position_[leaving] = -1;
      if (leaving < n_rows_) at_upper_[leaving] = sigma < 0 ? 1 : 0;
      basis_[leave] = q;
      position_[q] = leave;
      xb_[leave] = q_value;

      const Eigen::RowVectorXd pivot_row = binv_.row(leave) / aq[leave];
      binv_.noalias() -= aq * pivot_row;
      binv_.row(leave) = pivot_row;

      if (++since_refactor >= kRefactorEvery) {
        refactor();
        since_refactor = 0;
      }
    }

    refactor();
    compute_pi(pi);
    compute_reduced(pi, reduced);
    result.w.assign(pi.data(), pi.data() + dim_);
    result.theta = pi[dim_];
    result.objective = total_hinge(reduced);
    return result;
  }

 private:
  struct Candidate {
    double ratio;
    double abs_alpha;
    int index;
  };

  double upper_bound(int v) const { return v < n_rows_ ? counts_[v] : 0.0; }

  void add_column(int v, double scale, Eigen::VectorXd& out) const {
    if (v < n_rows_) {
      out.head(dim_) += (scale * sign_[v]) * x_.row(v).transpose();
      out[dim_] -= scale * sign_[v];
    } else {
      out[v - n_rows_] += scale;
    }
  }

  void compute_pi(Eigen::VectorXd& pi) const {
    Eigen::VectorXd cb(m_);
    for (int k = 0; k < m_; ++k) cb[k] = basis_[k] < n_rows_ ? cost_[basis_[k]] : 0.0;
    pi.noalias() = binv_.transpose() * cb;
  }

  // Reduced cost of sample r is c_r - s_r (w.x_r - theta), i.e. its hinge slack.
  void compute_reduced(const Eigen::VectorXd& pi, Eigen::VectorXd& reduced) const {
    reduced.noalias() = x_ * pi.head(dim_);
    const double pt = pi[dim_];
    for (int r = 0; r < n_rows_; ++r) reduced[r] = cost_[r] - sign_[r] * (reduced[r] - pt);
  }

  double total_hinge(const Eigen::VectorXd& reduced) const {
    double h = 0.0;
    for (int r = 0; r < n_rows_; ++r) h += counts_[r] * std::max(0.0, reduced[r]);
    return h;
  }

  void refactor() {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m_, m_);
    for (int k = 0; k < m_; ++k) {
      Eigen::VectorXd c = Eigen::VectorXd::Zero(m_);
      add_column(basis_[k], 1.0, c);
      b.col(k) = c;
    }
    binv_ = b.partialPivLu().inverse();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
    for (int r = 0; r < n_rows_; ++r) {
      if (at_upper_[r] && position_[r] < 0) add_column(r, -counts_[r], rhs);
    }
    xb_.noalias() = binv_ * rhs;
  }

  const std::vector<double>& counts_;
  int n_rows_;
  int dim_;
  int m_;
  Eigen::Map<const RowMatrix> x_;
  std::vector<double> sign_;
  std::vector<double> cost_;
  double max_count_ = 1.0;
  std::vector<char> at_upper_;
  std::vector<int> basis_;
  std::vector<int> position_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
};

}  // namespace

HingeLpResult solve_hinge_lp(const TrainingSet& data, const HingeLpOptions& options) {
  if (data.dim == 0) throw InputError("hinge LP needs dimension >= 1");
  if (data.rows.size() != data.size() * data.dim || data.counts.size() != data.size()) {
    throw InputError("training set arrays are inconsistent");
  }
  DualSimplex simplex(data);
  return simplex.run(options);
}

}  // namespace cmpl
