// SPDX-License-Identifier: Apache-2.0

#include "peerrank/solver.hpp"

#include <cmath>
#include <sstream>

namespace peerrank {

namespace {

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

void check_dims(const GradeMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) {
    std::ostringstream os;
    os << "grade vector has length " << x.size() << ", matrix expects "
       << a.size();
    throw ValidationError(os.str());
  }
}

void check_step_params(double alpha, double beta, double zero_weight_delta) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must satisfy 0 < alpha < 1");
  }
  if (!(beta >= 0.0)) throw ValidationError("beta must be >= 0");
  if (!(alpha + beta <= 1.0)) {
    throw ValidationError("alpha + beta must be <= 1");
  }
  if (!(zero_weight_delta >= 0.0)) {
    throw ValidationError("zero_weight_delta must be >= 0");
  }
}

double credit_of(const GradeMatrix& a, std::span<const double> x,
                 std::size_t agent) {
  const std::size_t m = a.size();
  const double* entries = a.entries().data();
  if (!a.masked()) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      sum += 1.0 - std::abs(entries[j * m + agent] - x[j]);
    }
    return sum / static_cast<double>(m);
  }
  double sum = 0.0;
  std::size_t graded = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (!a.present(j, agent)) continue;
    sum += 1.0 - std::abs(entries[j * m + agent] - x[j]);
    ++graded;
  }
  return graded == 0 ? 0.0 : sum / static_cast<double>(graded);
}

// Shared update kernel; beta == 0 is exactly the basic rule.
void apply_step(const GradeMatrix& a, std::span<const double> x, double alpha,
                double beta, double zero_weight_delta, std::span<double> out) {
  const std::size_t m = a.size();
  const double inertia = 1.0 - alpha - beta;
  const double* entries = a.entries().data();

  if (!a.masked()) {
    double weight_sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) weight_sum += x[j];
    const bool degenerate = weight_sum < zero_weight_delta;
    for (std::size_t i = 0; i < m; ++i) {
      const double* row = entries + i * m;
      double received;
      if (degenerate) {
        double mean = 0.0;
        for (std::size_t j = 0; j < m; ++j) mean += row[j];
        received = mean / static_cast<double>(m);
      } else {
        double dot = 0.0;
        for (std::size_t j = 0; j < m; ++j) dot += x[j] * row[j];
        received = dot / weight_sum;
      }
      double value = inertia * x[i] + alpha * received;
      if (beta != 0.0) {
        double credit = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          credit += 1.0 - std::abs(entries[j * m + i] - x[j]);
        }
        value += beta * (credit / static_cast<double>(m));
      }
      out[i] = clamp01(value);
    }
    return;
  }

  const std::uint8_t* mask = a.mask().data();
  for (std::size_t i = 0; i < m; ++i) {
    const double* row = entries + i * m;
    const std::uint8_t* mrow = mask + i * m;
    double weight_sum = 0.0;
    double dot = 0.0;
    double plain_sum = 0.0;
    std::size_t graders = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mrow[j] == 0) continue;
      weight_sum += x[j];
      dot += x[j] * row[j];
      plain_sum += row[j];
      ++graders;
    }
    const double received = weight_sum < zero_weight_delta
                                ? plain_sum / static_cast<double>(graders)
                                : dot / weight_sum;
    double value = inertia * x[i] + alpha * received;
    if (beta != 0.0) {
      double credit = 0.0;
      std::size_t graded = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (mask[j * m + i] == 0) continue;
        credit += 1.0 - std::abs(entries[j * m + i] - x[j]);
        ++graded;
      }
      if (graded != 0) value += beta * (credit / static_cast<double>(graded));
    }
    out[i] = clamp01(value);
  }
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = std::abs(x[i] - y[i]);
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace

GradeVector step_basic(const GradeMatrix& a, const GradeVector& x,
                       double alpha, double zero_weight_delta) {
  check_dims(a, x.values());
  check_step_params(alpha, 0.0, zero_weight_delta);
  std::vector<double> out(a.size());
  apply_step(a, x.values(), alpha, 0.0, zero_weight_delta, out);
  return GradeVector(std::move(out));
}

double accuracy_credit(const GradeMatrix& a, const GradeVector& x,
                       std::size_t agent) {
  check_dims(a, x.values());
  if (agent >= a.size()) {
    std::ostringstream os;
    os << "agent index " << agent << " out of range for " << a.size()
       << " agents";
    throw ValidationError(os.str());
  }
  return credit_of(a, x.values(), agent);
}

GradeVector step_generalized(const GradeMatrix& a, const GradeVector& x,
                             double alpha, double beta,
                             double zero_weight_delta) {
  check_dims(a, x.values());
  check_step_params(alpha, beta, zero_weight_delta);
  std::vector<double> out(a.size());
  apply_step(a, x.values(), alpha, beta, zero_weight_delta, out);
  return GradeVector(std::move(out));
}

double residual(const GradeVector& x, const GradeVector& y) {
  if (x.size() != y.size()) {
    throw ValidationError("residual requires vectors of equal length");
  }
  return max_abs_diff(x.values(), y.values());
}

SolveReport solve(const GradeMatrix& a, const PeerRankParams& params,
                  StepKind kind, const std::optional<GradeVector>& initial,
                  const SolveOptions& options) {
  validate(params);
  const double beta = kind == StepKind::Basic ? 0.0 : params.beta;
  check_step_params(params.alpha, beta, params.zero_weight_delta);

  std::vector<double> current;
  if (initial) {
    check_dims(a, initial->values());
    current = initial->values();
  } else {
    current = initial_grades(a).values();
  }

  const std::size_t m = a.size();
  std::vector<double> next(m);
  std::vector<double> history;
  if (options.record_history) history.reserve(64);
  if (options.observer) options.observer(0, current);

  bool converged = false;
  double last_residual = 0.0;
  std::size_t steps = 0;
  while (steps < params.max_iters) {
    apply_step(a, current, params.alpha, beta, params.zero_weight_delta, next);
    last_residual = max_abs_diff(current, next);
    current.swap(next);
    ++steps;
    if (options.record_history) history.push_back(last_residual);
    if (options.observer) options.observer(steps, current);
    if (last_residual <= params.epsilon) {
      converged = true;
      break;
    }
  }

  return SolveReport{GradeVector(std::move(current)), steps, converged,
                     last_residual, std::move(history)};
}

EigenvectorCheck verify_eigenvector(const GradeMatrix& a,
                                    const GradeVector& x, double tolerance) {
  check_dims(a, x.values());
  if (a.masked()) {
    throw ValidationError(
        "eigenvector check requires a full (unmasked) grade matrix");
  }
  const std::size_t m = a.size();
  double sum = 0.0;
  for (double v : x) sum += v;
  if (sum == 0.0) {
    throw ValidationError(
        "eigenvector check is undefined for an all-zero grade vector");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < m; ++j) dot += a.entry(i, j) * x[j];
    const double defect = std::abs(dot - sum * x[i]);
    if (defect > worst) worst = defect;
  }
  return EigenvectorCheck{worst <= tolerance, worst};
}

}  // namespace peerrank
