// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "peerrank/metrics.hpp"

using namespace peerrank;

TEST_CASE("rmse_percent is zero exactly for a perfect prediction") {
  // Marks whose /100 round-trips exactly in binary.
  const std::vector<int> marks{50, 75, 100, 0};
  const GradeVector predicted({0.50, 0.75, 1.0, 0.0});
  CHECK(rmse_percent(predicted, marks) == 0.0);
}

TEST_CASE("a uniform offset of five marks reads as five percent") {
  const std::vector<int> marks{50, 60, 70};
  const GradeVector predicted({0.55, 0.65, 0.75});
  CHECK(rmse_percent(predicted, marks) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("rmse_percent matches the hand-computed example") {
  // sqrt((10^2 + 10^2)/2) = 10
  const GradeVector predicted({0.6, 0.8});
  CHECK(rmse_percent(predicted, {70, 70}) ==
        doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("rmse_percent rejects mismatched lengths") {
  const GradeVector predicted({0.5, 0.5});
  CHECK_THROWS_AS(rmse_percent(predicted, {50}), ValidationError);
}

TEST_CASE("rmse_percent is invariant under a joint permutation") {
  const std::vector<int> marks{10, 40, 90, 70};
  const GradeVector predicted({0.2, 0.5, 0.8, 0.6});
  const std::vector<int> marks_p{70, 90, 10, 40};
  const GradeVector predicted_p({0.6, 0.8, 0.2, 0.5});
  CHECK(rmse_percent(predicted, marks) ==
        doctest::Approx(rmse_percent(predicted_p, marks_p)).epsilon(1e-14));
}

TEST_CASE("rmse_percent is zero only for an exact match") {
  const GradeVector predicted({0.5, 0.5});
  CHECK(rmse_percent(predicted, {50, 51}) > 0.0);
}
