// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "peerrank/peerrank.hpp"

namespace {

using namespace peerrank;

GradeMatrix random_matrix(std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> entries(m * m);
  for (auto& v : entries) v = rng.next_double();
  return GradeMatrix(std::move(entries), m);
}

void BM_StepBasic(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const GradeMatrix a = random_matrix(m, 42);
  GradeVector x = initial_grades(a);
  for (auto _ : state) {
    x = step_basic(a, x, 0.1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_StepBasic)->Arg(10)->Arg(50)->Arg(200);

void BM_StepGeneralized(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const GradeMatrix a = random_matrix(m, 42);
  GradeVector x = initial_grades(a);
  for (auto _ : state) {
    x = step_generalized(a, x, 0.1, 0.1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_StepGeneralized)->Arg(10)->Arg(50)->Arg(200);

void BM_SolveBasic(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const GradeMatrix a = random_matrix(m, 7);
  PeerRankParams params;
  SolveOptions options;
  options.record_history = false;
  for (auto _ : state) {
    SolveReport report =
        solve(a, params, StepKind::Basic, std::nullopt, options);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_SolveBasic)->Arg(10)->Arg(50);

void BM_SolveGeneralized(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const GradeMatrix a = random_matrix(m, 7);
  PeerRankParams params;
  SolveOptions options;
  options.record_history = false;
  for (auto _ : state) {
    SolveReport report =
        solve(a, params, StepKind::Generalized, std::nullopt, options);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_SolveGeneralized)->Arg(10)->Arg(50);

void BM_BuildGradeMatrix(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  Rng marks_rng(3);
  const std::vector<int> marks =
      sample_true_marks(BinomialMarks{0.7, 100}, m, marks_rng);
  const MarkingModel model;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    GradeMatrix a = build_grade_matrix(marks, model, 1.0, rng);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_BuildGradeMatrix)->Arg(10)->Arg(50);

void BM_RunTrial(benchmark::State& state) {
  ExperimentConfig config;
  config.base_seed = 11;
  std::size_t trial = 0;
  for (auto _ : state) {
    TrialResult result = run_trial(config, trial++);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_RunTrial);

}  // namespace

BENCHMARK_MAIN();
