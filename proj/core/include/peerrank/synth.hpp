// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "peerrank/grade_matrix.hpp"
#include "peerrank/rng.hpp"

namespace peerrank {

// --- True-mark distributions (marks are integers in [0, 100]) -------------

struct BinomialMarks {
  double p = 0.7;
  int trials = 100;
};

struct NormalMarks {
  double mean = 70.0;
  double sd = 10.0;  // draws are rounded and clamped to [0, 100]
};

struct UniformMarks {
  int lo = 0;
  int hi = 100;  // integer-uniform on [lo, hi]
};

using MarkDistribution = std::variant<BinomialMarks, NormalMarks, UniformMarks>;

// --- Marking models (how a grader turns a true mark into a peer grade) ----

// Each grade is out of `questions` marks; c = round(questions * mark / 100)
// is the number of questions the gradee is expected to have right.

// Sum of two binomials: Bin(c, g) right answers marked right plus
// Bin(questions - c, 1 - g) wrong answers mismarked right, where g is the
// grader's own normalized grade.
struct BinomialSumModel {};

// c plus Normal(0, c_prop*(1-g) + eps_sd) noise, rounded and clamped; a
// perfect grader (g = 1) is deterministic.
struct NormalNoiseModel {
  double c_prop = 2.0;
  double eps_sd = 0.0;
};

// Integer-uniform on [c - w, c + w] with w = round(c_prop*(1-g)), clamped.
struct UniformNoiseModel {
  double c_prop = 2.0;
};

struct MarkingModel {
  std::variant<BinomialSumModel, NormalNoiseModel, UniformNoiseModel> kind =
      BinomialSumModel{};
  int questions = 10;
};

// --- Operations ------------------------------------------------------------

/// m independent true marks from the given distribution.
std::vector<int> sample_true_marks(const MarkDistribution& dist, std::size_t m,
                                   Rng& rng);

/// One peer grade in [0, questions] for a gradee with the given true mark,
/// drawn by a grader of skill grader_grade in [0, 1].
int peer_grade(int true_mark, double grader_grade, const MarkingModel& model,
               Rng& rng);

/// Systematic generosity/harshness: clamp(round(r * grade), 0, max_grade).
int apply_bias(int grade, double r, int max_grade = 10);

/// Full m-by-m grade matrix: entry (i, j) is agent j's biased grade of agent
/// i divided by `questions`, drawn row by row (i outer, j inner). Self-grades
/// use the same model. Deterministic in the rng state.
GradeMatrix build_grade_matrix(const std::vector<int>& true_marks,
                               const MarkingModel& model, double bias_r,
                               Rng& rng);

}  // namespace peerrank
