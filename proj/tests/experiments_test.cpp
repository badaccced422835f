// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "doctest.h"
#include "peerrank/experiments.hpp"

using namespace peerrank;

namespace {

ExperimentConfig base_config(std::uint64_t seed) {
  ExperimentConfig config;
  config.base_seed = seed;
  return config;
}

}  // namespace

TEST_CASE("run_trial is deterministic in config and trial index") {
  const ExperimentConfig config = base_config(99);
  const TrialResult a = run_trial(config, 5);
  const TrialResult b = run_trial(config, 5);
  CHECK(a.rmse_peerrank_pct == b.rmse_peerrank_pct);
  CHECK(a.rmse_average_pct == b.rmse_average_pct);
  CHECK(a.converged == b.converged);
  CHECK(a.iterations == b.iterations);
  const TrialResult c = run_trial(config, 6);
  CHECK(a.rmse_peerrank_pct != c.rmse_peerrank_pct);
}

TEST_CASE("a perfect cohort has zero error under both rules") {
  ExperimentConfig config = base_config(1);
  config.dist = BinomialMarks{1.0, 100};
  for (std::size_t t = 0; t < 5; ++t) {
    const TrialResult trial = run_trial(config, t);
    CHECK(trial.rmse_peerrank_pct == 0.0);
    CHECK(trial.rmse_average_pct == 0.0);
    CHECK(trial.converged);
  }
}

TEST_CASE("run_trial validates the config") {
  ExperimentConfig config = base_config(1);
  config.m = 1;
  CHECK_THROWS_AS(run_trial(config, 0), ValidationError);
  config = base_config(1);
  config.trials = 0;
  CHECK_THROWS_AS(run_trial(config, 0), ValidationError);
  config = base_config(1);
  config.bias_r = 0.0;
  CHECK_THROWS_AS(run_trial(config, 0), ValidationError);
}

TEST_CASE("at p 0.7 the generalized rule beats averaging") {
  ExperimentConfig config = base_config(7);
  config.trials = 200;
  double sum_peerrank = 0.0;
  double sum_average = 0.0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const TrialResult trial = run_trial(config, t);
    sum_peerrank += trial.rmse_peerrank_pct;
    sum_average += trial.rmse_average_pct;
  }
  const double n = static_cast<double>(config.trials);
  CHECK(sum_peerrank / n <= 5.0);
  CHECK(sum_peerrank / n < sum_average / n);
}

TEST_CASE("sweep of a perfect cohort is a zero row") {
  const std::vector<double> values{1.0};
  const auto rows = sweep_binomial_p(values, base_config(3));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].swept_value == 1.0);
  CHECK(rows[0].mean_rmse_peerrank_pct == 0.0);
  CHECK(rows[0].mean_rmse_average_pct == 0.0);
  CHECK(rows[0].trials == 200);
  CHECK(rows[0].nonconverged == 0);
}

TEST_CASE("neutral bias equals the matching binomial point") {
  const ExperimentConfig config = base_config(21);
  const std::vector<double> r{1.0};
  const std::vector<double> p{0.7};
  const auto via_bias = sweep_bias_r(r, config);
  const auto via_p = sweep_binomial_p(p, config);
  CHECK(via_bias[0].mean_rmse_peerrank_pct ==
        via_p[0].mean_rmse_peerrank_pct);
  CHECK(via_bias[0].mean_rmse_average_pct == via_p[0].mean_rmse_average_pct);
}

TEST_CASE("sweeps are reproducible byte for byte") {
  ExperimentConfig config = base_config(17);
  config.trials = 50;
  const std::vector<double> values{0.65, 0.8};
  const auto first = sweep_binomial_p(values, config);
  const auto second = sweep_binomial_p(values, config);
  CHECK(sweep_to_csv(first) == sweep_to_csv(second));
  CHECK(sweep_to_json(first) == sweep_to_json(second));
}

TEST_CASE("sweep rows come back in input order") {
  ExperimentConfig config = base_config(17);
  config.trials = 20;
  const std::vector<double> values{0.9, 0.6, 0.75};
  const auto rows = sweep_binomial_p(values, config);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].swept_value == 0.9);
  CHECK(rows[1].swept_value == 0.6);
  CHECK(rows[2].swept_value == 0.75);
}

TEST_CASE("figure-1 trend: error falls as the cohort improves") {
  ExperimentConfig config = base_config(29);
  config.trials = 200;
  const std::vector<double> values{0.65, 0.9};
  const auto rows = sweep_binomial_p(values, config);
  CHECK(rows[1].mean_rmse_peerrank_pct < rows[0].mean_rmse_peerrank_pct);
}

TEST_CASE("non-converged trials are counted, not dropped") {
  ExperimentConfig config = base_config(31);
  config.trials = 10;
  config.params.epsilon = 1e-16;
  config.params.max_iters = 2;
  const std::vector<double> values{0.7};
  const auto rows = sweep_binomial_p(values, config);
  CHECK(rows[0].nonconverged == 10);
  CHECK(rows[0].trials == 10);
  CHECK(rows[0].mean_rmse_peerrank_pct > 0.0);
}

TEST_CASE("group-size sweep validates its values") {
  const std::vector<std::size_t> bad{1};
  CHECK_THROWS_AS(sweep_group_size(bad, base_config(1)), ValidationError);
  const std::vector<std::size_t> none{};
  CHECK_THROWS_AS(sweep_group_size(none, base_config(1)), ValidationError);
}

TEST_CASE("uniform-lo sweep rejects fractional bounds") {
  const std::vector<double> bad{52.5};
  CHECK_THROWS_AS(sweep_uniform_lo(bad, base_config(1)), ValidationError);
}

TEST_CASE("sweep tables serialize with stable headers") {
  SweepRow row;
  row.swept_value = 0.7;
  row.mean_rmse_peerrank_pct = 3.25;
  row.mean_rmse_average_pct = 11.5;
  row.trials = 200;
  row.nonconverged = 1;
  const std::vector<SweepRow> rows{row};
  CHECK(sweep_to_csv(rows) ==
        "swept_value,rmse_peerrank_pct,rmse_average_pct,trials,nonconverged\n"
        "0.7,3.250000,11.500000,200,1\n");
  CHECK(sweep_to_json(rows) ==
        "[\n"
        "  {\"swept_value\": 0.7, \"rmse_peerrank_pct\": 3.25, "
        "\"rmse_average_pct\": 11.5, \"trials\": 200, \"nonconverged\": 1}\n"
        "]\n");
}
