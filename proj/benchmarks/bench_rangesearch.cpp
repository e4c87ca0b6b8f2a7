#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "lakecov/rangesearch.hpp"

using namespace lakecov;

namespace {

DimInterval dim(std::int64_t lo, std::int64_t hi) {
  return {{Value::of_int(lo), true}, {Value::of_int(hi), true}};
}

IntervalPredicate box2(std::int64_t xl, std::int64_t xh, std::int64_t yl, std::int64_t yh) {
  IntervalPredicate iv;
  iv.dims = {dim(xl, xh), dim(yl, yh)};
  return iv;
}

std::vector<Point2m> make_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> lo(0, 94999), width(0, 5000);
  std::vector<Point2m> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t xl = lo(rng), yl = lo(rng);
    pts.push_back(interval_to_point(box2(xl, xl + width(rng), yl, yl + width(rng)), i));
  }
  return pts;
}

std::vector<UpperBoundRange> make_queries(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pos(0, 99999);
  std::vector<UpperBoundRange> qs;
  qs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t x = pos(rng), y = pos(rng);
    qs.push_back(query_to_bounds(box2(x, x, y, y)));
  }
  return qs;
}

KdSpec two_int_spec() { return kd_spec_for({ValueKind::Int, ValueKind::Int}); }

}  // namespace

static void BM_KdBulkBuild(benchmark::State& state) {
  auto pts = make_points(std::size_t(state.range(0)), 42);
  for (auto _ : state) {
    KdTree tree(two_int_spec());
    tree.bulk_build(pts);
    benchmark::DoNotOptimize(tree.size());
  }
}
BENCHMARK(BM_KdBulkBuild)->Range(1024, 32768);

static void BM_KdInsert(benchmark::State& state) {
  auto pts = make_points(std::size_t(state.range(0)), 42);
  for (auto _ : state) {
    KdTree tree(two_int_spec());
    for (const auto& p : pts) tree.insert(p);
    benchmark::DoNotOptimize(tree.size());
  }
}
BENCHMARK(BM_KdInsert)->Range(1024, 16384);

static void BM_KdSearch(benchmark::State& state) {
  KdTree tree(two_int_spec());
  tree.bulk_build(make_points(std::size_t(state.range(0)), 42));
  auto queries = make_queries(256, 43);
  std::size_t qi = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tree.range_search(queries[qi]));
    qi = (qi + 1) % queries.size();
  }
}
BENCHMARK(BM_KdSearch)->Range(1024, 65536);
