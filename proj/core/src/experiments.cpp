// SPDX-License-Identifier: Apache-2.0

#include "peerrank/experiments.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "peerrank/solver.hpp"

namespace peerrank {

namespace {

void check_config(const ExperimentConfig& config) {
  if (config.m < 2) {
    throw ValidationError("group size m must be >= 2 for peer grading");
  }
  if (config.trials < 1) throw ValidationError("trials must be >= 1");
  if (!(config.bias_r > 0.0)) throw ValidationError("bias factor r must be > 0");
  validate(config.params);
}

SweepRow run_point(double swept_value, const ExperimentConfig& config) {
  double sum_peerrank = 0.0;
  double sum_average = 0.0;
  std::size_t nonconverged = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const TrialResult trial = run_trial(config, t);
    sum_peerrank += trial.rmse_peerrank_pct;
    sum_average += trial.rmse_average_pct;
    if (!trial.converged) ++nonconverged;
  }
  const double n = static_cast<double>(config.trials);
  return SweepRow{swept_value, sum_peerrank / n, sum_average / n,
                  config.trials, nonconverged};
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

TrialResult run_trial(const ExperimentConfig& config,
                      std::size_t trial_index) {
  check_config(config);
  Rng rng(derive_seed(config.base_seed, trial_index));
  const std::vector<int> marks = sample_true_marks(config.dist, config.m, rng);
  const GradeMatrix matrix =
      build_grade_matrix(marks, config.model, config.bias_r, rng);

  SolveOptions options;
  options.record_history = false;
  const SolveReport report =
      solve(matrix, config.params, StepKind::Generalized, std::nullopt,
            options);
  const GradeVector baseline = average_rule(matrix);

  return TrialResult{rmse_percent(report.grades, marks),
                     rmse_percent(baseline, marks), report.converged,
                     report.iterations};
}

std::vector<SweepRow> sweep_binomial_p(std::span<const double> p_values,
                                       ExperimentConfig config) {
  if (p_values.empty()) throw ValidationError("sweep needs at least one value");
  std::vector<SweepRow> rows;
  rows.reserve(p_values.size());
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("binomial p must lie in [0,1]");
    }
    config.dist = BinomialMarks{p, 100};
    rows.push_back(run_point(p, config));
  }
  return rows;
}

std::vector<SweepRow> sweep_normal_sd(std::span<const double> sd_values,
                                      ExperimentConfig config) {
  if (sd_values.empty()) throw ValidationError("sweep needs at least one value");
  const double mean = std::holds_alternative<NormalMarks>(config.dist)
                          ? std::get<NormalMarks>(config.dist).mean
                          : 70.0;
  std::vector<SweepRow> rows;
  rows.reserve(sd_values.size());
  for (double sd : sd_values) {
    if (!(sd >= 0.0)) throw ValidationError("normal sd must be >= 0");
    config.dist = NormalMarks{mean, sd};
    rows.push_back(run_point(sd, config));
  }
  return rows;
}

std::vector<SweepRow> sweep_uniform_lo(std::span<const double> lo_values,
                                       ExperimentConfig config) {
  if (lo_values.empty()) throw ValidationError("sweep needs at least one value");
  std::vector<SweepRow> rows;
  rows.reserve(lo_values.size());
  for (double lo : lo_values) {
    if (!(lo >= 0.0 && lo <= 100.0) || lo != std::floor(lo)) {
      throw ValidationError("uniform lo must be an integer in [0,100]");
    }
    config.dist = UniformMarks{static_cast<int>(lo), 100};
    rows.push_back(run_point(lo, config));
  }
  return rows;
}

std::vector<SweepRow> sweep_bias_r(std::span<const double> r_values,
                                   ExperimentConfig config) {
  if (r_values.empty()) throw ValidationError("sweep needs at least one value");
  std::vector<SweepRow> rows;
  rows.reserve(r_values.size());
  for (double r : r_values) {
    if (!(r > 0.0)) throw ValidationError("bias factor r must be > 0");
    config.bias_r = r;
    rows.push_back(run_point(r, config));
  }
  return rows;
}

std::vector<SweepRow> sweep_group_size(std::span<const std::size_t> m_values,
                                       ExperimentConfig config) {
  if (m_values.empty()) throw ValidationError("sweep needs at least one value");
  std::vector<SweepRow> rows;
  rows.reserve(m_values.size());
  for (std::size_t m : m_values) {
    if (m < 2) throw ValidationError("group size m must be >= 2");
    config.m = m;
    rows.push_back(run_point(static_cast<double>(m), config));
  }
  return rows;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::ostringstream os;
  os << "swept_value,rmse_peerrank_pct,rmse_average_pct,trials,nonconverged\n";
  for (const SweepRow& row : rows) {
    os << format_double(row.swept_value) << ','
       << format_fixed6(row.mean_rmse_peerrank_pct) << ','
       << format_fixed6(row.mean_rmse_average_pct) << ',' << row.trials << ','
       << row.nonconverged << '\n';
  }
  return os.str();
}

std::string sweep_to_json(std::span<const SweepRow> rows) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = rows[i];
    os << "  {\"swept_value\": " << format_double(row.swept_value)
       << ", \"rmse_peerrank_pct\": "
       << format_double(row.mean_rmse_peerrank_pct)
       << ", \"rmse_average_pct\": "
       << format_double(row.mean_rmse_average_pct)
       << ", \"trials\": " << row.trials
       << ", \"nonconverged\": " << row.nonconverged << '}'
       << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
  return os.str();
}

}  // namespace peerrank
