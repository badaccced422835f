// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace peerrank {

/// Thrown when an input violates a documented precondition: grade outside
/// [0,1], shape mismatch, degenerate mask, out-of-range parameter, bad file
/// contents. The message names the offending row/column where applicable.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square matrix of normalized peer grades.
///
/// Orientation: entry(i, j) is the grade agent j gave agent i's work
/// (row = gradee, column = grader). Every present entry lies in [0, 1].
///
/// An optional presence mask supports subset grading: present(i, j) is true
/// iff agent j actually graded agent i. Without a mask all entries are
/// present, i.e. every agent grades everyone including themselves. In masked
/// mode each agent must keep at least one grader; masked-out entries are
/// normalized to 0 in storage.
///
/// Immutable after construction; safe to share across threads.
class GradeMatrix {
 public:
  /// Full (unmasked) matrix from row-major entries of size m*m.
  GradeMatrix(std::vector<double> entries, std::size_t m);

  /// Masked matrix; mask is row-major m*m, nonzero = present.
  GradeMatrix(std::vector<double> entries, std::vector<std::uint8_t> mask,
              std::size_t m);

  std::size_t size() const { return m_; }

  double entry(std::size_t i, std::size_t j) const {
    return entries_[i * m_ + j];
  }

  bool present(std::size_t i, std::size_t j) const {
    return mask_.empty() || mask_[i * m_ + j] != 0;
  }

  /// True when constructed with a mask that hides at least one entry.
  bool masked() const { return !mask_.empty(); }

  /// Number of agents that graded agent i (all of row i that is present).
  std::size_t grader_count(std::size_t i) const;

  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * m_, m_};
  }

  const std::vector<double>& entries() const { return entries_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

 private:
  void check_invariants() const;

  std::size_t m_ = 0;
  std::vector<double> entries_;       // row-major m*m
  std::vector<std::uint8_t> mask_;    // empty = all present
};

/// Length-m vector of grades, every component in [0, 1].
class GradeVector {
 public:
  explicit GradeVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

 private:
  std::vector<double> values_;
};

/// Iteration parameters. alpha weights the grade-weighted average term,
/// beta the accuracy credit; the inertia weight is 1 - alpha - beta.
/// Constraints: 0 < alpha < 1, beta >= 0, alpha + beta <= 1, epsilon > 0,
/// max_iters >= 1, zero_weight_delta >= 0.
struct PeerRankParams {
  double alpha = 0.1;
  double beta = 0.1;
  double epsilon = 1e-10;
  std::size_t max_iters = 10000;
  // Weight sums below this fall back to the unweighted row mean.
  double zero_weight_delta = 1e-12;
};

/// Throws ValidationError if params violate their constraints.
void validate(const PeerRankParams& params);

/// Builds a validated GradeMatrix from a nested row-major array and an
/// optional presence mask of the same shape.
///
/// Errors: non-square input, entry outside [0,1] (present entries only when
/// masked), agent left with zero graders, empty input.
GradeMatrix validate_matrix(
    const std::vector<std::vector<double>>& raw,
    const std::optional<std::vector<std::vector<std::uint8_t>>>& mask =
        std::nullopt);

/// Per-agent mean of the received grades: component i is the arithmetic mean
/// of the present entries in row i. This is both the iteration's starting
/// vector X0 and the AVERAGE baseline.
GradeVector initial_grades(const GradeMatrix& a);

/// The AVERAGE rule: identical contract to initial_grades, exposed under the
/// baseline's own name.
GradeVector average_rule(const GradeMatrix& a);

}  // namespace peerrank
