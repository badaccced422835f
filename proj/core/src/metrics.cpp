// SPDX-License-Identifier: Apache-2.0

#include "peerrank/metrics.hpp"

#include <cmath>

namespace peerrank {

double rmse_percent(const GradeVector& predicted,
                    const std::vector<int>& true_marks) {
  if (predicted.size() != true_marks.size()) {
    throw ValidationError("rmse_percent requires equal-length inputs");
  }
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double err = 100.0 * predicted[i] - true_marks[i];
    sum_sq += err * err;
  }
  return std::sqrt(sum_sq / static_cast<double>(predicted.size()));
}

}  // namespace peerrank
