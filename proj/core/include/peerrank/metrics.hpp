// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "peerrank/grade_matrix.hpp"

namespace peerrank {

/// Per-trial errors of the two rules, in marks out of 100.
struct TrialResult {
  double rmse_peerrank_pct = 0.0;
  double rmse_average_pct = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

/// Root mean square error of the predicted marks on the 0-100 scale:
///   sqrt((1/m) * sum_i (100*predicted[i] - true_marks[i])^2)
/// Numerically equal to a percentage of the maximum mark. Predictions are
/// compared unrounded.
double rmse_percent(const GradeVector& predicted,
                    const std::vector<int>& true_marks);

}  // namespace peerrank
