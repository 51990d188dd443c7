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

#ifndef CMPL_HINGE_LP_HPP_
#define CMPL_HINGE_LP_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "cmpl/septrain.hpp"

namespace cmpl {

// Solves the total-hinge problem
//
//   min  sum_r c_r xi_r   s.t.  s_r (w.x_r - theta) + xi_r >= 1,  xi >= 0
//
// through its bounded equality-form dual
//
//   max  sum_r y_r        s.t.  sum_r y_r a_r = 0,  0 <= y_r <= c_r,
//   a_r = s_r (x_r, -1),
//
// with a dual simplex (bound-flipping ratio test). The basis has dim + 1 rows.
// Every iterate's multipliers pi = (w, theta) are a primal point whose total
// hinge H(pi) is the current objective, and H only decreases. The optimum is 0
// exactly when the data is strictly separable and at least min_r c_r
// otherwise, so H(pi) < stop_below proves separability early.
struct HingeLpOptions {
  double stop_below = -1.0;
  std::uint64_t max_iterations = 1'000'000;
};

struct HingeLpResult {
  std::vector<double> w;
  double theta = 0.0;
  double objective = 0.0;     // total hinge of (w, theta)
  bool optimal = false;       // false when stopped early or at the iteration cap
  bool stopped_early = false;
  std::uint64_t iterations = 0;
};

HingeLpResult solve_hinge_lp(const TrainingSet& data, const HingeLpOptions& options = {});

}  // namespace cmpl

#endif  // CMPL_HINGE_LP_HPP_
