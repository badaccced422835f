// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "peerrank/grade_matrix.hpp"

namespace peerrank {

/// Which update rule the fixed-point search iterates. Basic behaves exactly
/// like Generalized with beta = 0.
enum class StepKind { Basic, Generalized };

/// Outcome of a fixed-point search. `converged` implies
/// final_residual <= epsilon; iterations never exceeds max_iters.
/// Non-convergence is reported here, never thrown.
struct SolveReport {
  GradeVector grades;
  std::size_t iterations = 0;
  bool converged = false;
  double final_residual = 0.0;
  std::vector<double> residual_history;
};

/// Called with every iterate, starting at iteration 0 with the seed vector.
using IterationObserver =
    std::function<void(std::size_t iteration, std::span<const double> grades)>;

struct SolveOptions {
  // Long non-converging runs can disable this to avoid a large history.
  bool record_history = true;
  IterationObserver observer;
};

inline constexpr double kDefaultZeroWeightDelta = 1e-12;

/// One basic update:
///   x'[i] = (1-alpha)*x[i] + alpha * (sum_j x[j]*A(i,j)) / (sum_j x[j])
/// When the weight sum falls below zero_weight_delta the weighted average
/// degenerates to the unweighted row mean (zero weights carry no
/// information, and this keeps the all-zero matrix a fixed point). In masked
/// mode both sums run over the present graders of row i. Output components
/// are clamped to [0,1] so the domain guarantee holds exactly in floating
/// point.
GradeVector step_basic(const GradeMatrix& a, const GradeVector& x,
                       double alpha,
                       double zero_weight_delta = kDefaultZeroWeightDelta);

/// Accuracy of the grades agent `agent` handed out, with the beta weight
/// factored out:
///   (1/m) * sum_j (1 - |A(j, agent) - x[j]|)
/// 1 means every given grade matches the current estimate of its recipient,
/// 0 means every given grade is maximally wrong. In masked mode the mean
/// runs over the agents that `agent` actually graded; an agent that graded
/// nobody earns credit 0.
double accuracy_credit(const GradeMatrix& a, const GradeVector& x,
                       std::size_t agent);

/// One generalized update:
///   x'[i] = (1-alpha-beta)*x[i]
///         + alpha * weighted received average   (as in step_basic)
///         + beta  * accuracy_credit(a, x, i)
/// Bitwise identical to step_basic when beta == 0.
GradeVector step_generalized(const GradeMatrix& a, const GradeVector& x,
                             double alpha, double beta,
                             double zero_weight_delta =
                                 kDefaultZeroWeightDelta);

/// Infinity norm of the componentwise difference.
double residual(const GradeVector& x, const GradeVector& y);

/// Iterates the chosen rule from `initial` (default: initial_grades(a))
/// until residual <= params.epsilon or params.max_iters steps have run.
/// With StepKind::Basic the params.beta value is ignored and treated as 0.
SolveReport solve(const GradeMatrix& a, const PeerRankParams& params,
                  StepKind kind,
                  const std::optional<GradeVector>& initial = std::nullopt,
                  const SolveOptions& options = {});

struct EigenvectorCheck {
  bool is_eigenvector = false;
  double max_defect = 0.0;
};

/// Checks the fixed-point eigenvector relation A*x = (sum_j x[j]) * x:
/// max_defect = max_i |(A*x)[i] - (sum x)*x[i]|, compared against
/// `tolerance`. Requires a full (unmasked) matrix and a not-all-zero x.
/// Meaningful for basic-rule fixed points; the generalized rule's fixed
/// points carry no such claim.
EigenvectorCheck verify_eigenvector(const GradeMatrix& a,
                                    const GradeVector& x, double tolerance);

}  // namespace peerrank
