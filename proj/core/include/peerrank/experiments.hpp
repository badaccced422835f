// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "peerrank/metrics.hpp"
#include "peerrank/synth.hpp"

namespace peerrank {

/// One synthetic-cohort configuration. A full experiment is a pure function
/// of this struct plus a trial index, so trials are reproducible and
/// order-insensitive: trial t draws from Rng(derive_seed(base_seed, t)).
struct ExperimentConfig {
  std::size_t m = 10;
  MarkDistribution dist = BinomialMarks{};
  MarkingModel model = {};
  double bias_r = 1.0;
  PeerRankParams params = {};
  std::size_t trials = 200;
  std::uint64_t base_seed = 0;
};

/// One plotted point of a sweep: means over exactly `trials` trials.
struct SweepRow {
  double swept_value = 0.0;
  double mean_rmse_peerrank_pct = 0.0;
  double mean_rmse_average_pct = 0.0;
  std::size_t trials = 0;
  std::size_t nonconverged = 0;
};

/// Samples true marks, builds the peer-grade matrix, solves the generalized
/// rule and the AVERAGE baseline, and reports both errors. Deterministic in
/// (config, trial_index). Non-convergence is reported, not thrown.
TrialResult run_trial(const ExperimentConfig& config, std::size_t trial_index);

/// Parameter sweeps; one row per swept value, emitted in input order. Every
/// sweep point reuses the same per-trial seed stream (common random numbers),
/// so two sweeps under an identical effective config produce identical rows.
std::vector<SweepRow> sweep_binomial_p(std::span<const double> p_values,
                                       ExperimentConfig config);
std::vector<SweepRow> sweep_normal_sd(std::span<const double> sd_values,
                                      ExperimentConfig config);
std::vector<SweepRow> sweep_uniform_lo(std::span<const double> lo_values,
                                       ExperimentConfig config);
std::vector<SweepRow> sweep_bias_r(std::span<const double> r_values,
                                   ExperimentConfig config);
std::vector<SweepRow> sweep_group_size(std::span<const std::size_t> m_values,
                                       ExperimentConfig config);

/// CSV table: header `swept_value,rmse_peerrank_pct,rmse_average_pct,trials,
/// nonconverged`, means printed with six decimals. Stable byte-for-byte for
/// identical rows.
std::string sweep_to_csv(std::span<const SweepRow> rows);

/// JSON array of row objects with the same keys as the CSV columns; doubles
/// are shortest-round-trip so no precision is lost.
std::string sweep_to_json(std::span<const SweepRow> rows);

}  // namespace peerrank
