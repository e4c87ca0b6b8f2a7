#include <benchmark/benchmark.h>

#include <random>

#include "lakecov/planner.hpp"

using namespace lakecov;

namespace {

// Numeric instances shaped like the estimator's output: small integer costs,
// record counts well under the table size.
BqcppInput make_input(std::size_t clauses, std::size_t plans) {
  std::mt19937_64 rng(17 * clauses + plans);
  std::uniform_real_distribution<double> cost(1.0, 4.0);
  std::uniform_real_distribution<double> records(1.0, 500.0);
  BqcppInput in;
  in.table_rows = 10000;
  in.file_count = 100;
  for (std::size_t i = 0; i < clauses; ++i) {
    std::vector<PlanEstimate> cp;
    for (std::size_t j = 0; j < plans; ++j)
      cp.push_back({cost(rng), NumericResult::of(records(rng))});
    in.clauses.push_back(std::move(cp));
  }
  return in;
}

}  // namespace

static void BM_OptimisticSolve(benchmark::State& state) {
  auto in = make_input(std::size_t(state.range(0)), 2);
  auto sg = numeric_semigroup(in.table_rows, in.file_count);
  for (auto _ : state) benchmark::DoNotOptimize(solve_optimistic(in, sg));
}
BENCHMARK(BM_OptimisticSolve)->DenseRange(2, 10, 2);

static void BM_GreedySolve(benchmark::State& state) {
  auto in = make_input(std::size_t(state.range(0)), 2);
  auto sg = numeric_semigroup(in.table_rows, in.file_count);
  for (auto _ : state) benchmark::DoNotOptimize(solve_greedy(in, sg));
}
BENCHMARK(BM_GreedySolve)->DenseRange(2, 16, 2);

static void BM_PlanCostFold(benchmark::State& state) {
  auto in = make_input(std::size_t(state.range(0)), 1);
  auto sg = numeric_semigroup(in.table_rows, in.file_count);
  std::vector<PlanRef> all;
  for (std::size_t i = 0; i < in.clauses.size(); ++i) all.push_back({i, 0});
  for (auto _ : state) benchmark::DoNotOptimize(plan_cost(all, in, sg));
}
BENCHMARK(BM_PlanCostFold)->DenseRange(2, 16, 2);

BENCHMARK_MAIN();
