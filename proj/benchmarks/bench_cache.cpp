#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <string>

#include "lakecov/cache.hpp"

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

TableSchema two_col_schema() {
  return TableSchema({{"x", ValueKind::Int}, {"y", ValueKind::Int}});
}

Domains two_col_domains() {
  return {{Value::of_int(0), Value::of_int(99999)}, {Value::of_int(0), Value::of_int(99999)}};
}

void fill_cache(CoverageCache& cache, std::size_t entries) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> lo(0, 94999), width(0, 5000);
  for (std::size_t i = 0; i < entries; ++i) {
    std::int64_t xl = lo(rng), yl = lo(rng);
    cache.put(box2(xl, xl + width(rng), yl, yl + width(rng)),
              {"data/b/f" + std::to_string(i % 512)}, 0);
  }
}

}  // namespace

static void BM_CacheLookupList(benchmark::State& state) {
  CoverageCache cache(two_col_schema(), two_col_domains(), CacheBackend::List, EvictionPolicy{},
                      "data/b/");
  fill_cache(cache, std::size_t(state.range(0)));
  MemoryStore store;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> pos(0, 99999);
  for (auto _ : state) {
    std::int64_t x = pos(rng), y = pos(rng);
    benchmark::DoNotOptimize(cache.get_min_coverage(box2(x, x, y, y), store));
  }
}
BENCHMARK(BM_CacheLookupList)->Range(256, 16384);

static void BM_CacheLookupSpatial(benchmark::State& state) {
  CoverageCache cache(two_col_schema(), two_col_domains(), CacheBackend::Spatial, EvictionPolicy{},
                      "data/b/");
  fill_cache(cache, std::size_t(state.range(0)));
  MemoryStore store;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> pos(0, 99999);
  for (auto _ : state) {
    std::int64_t x = pos(rng), y = pos(rng);
    benchmark::DoNotOptimize(cache.get_min_coverage(box2(x, x, y, y), store));
  }
}
BENCHMARK(BM_CacheLookupSpatial)->Range(256, 16384);

static void BM_CachePutEvict(benchmark::State& state) {
  EvictionPolicy policy;
  policy.kind = PolicyKind::VolumeOptimized;
  policy.capacity = std::size_t(state.range(0));
  CoverageCache cache(two_col_schema(), two_col_domains(), CacheBackend::List, policy, "data/b/");
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> lo(0, 94999), width(0, 5000);
  std::size_t i = 0;
  for (auto _ : state) {
    std::int64_t xl = lo(rng), yl = lo(rng);
    cache.put(box2(xl, xl + width(rng), yl, yl + width(rng)),
              {"data/b/f" + std::to_string(i++ % 512)}, 0);
    benchmark::DoNotOptimize(cache.live_entries());
  }
}
BENCHMARK(BM_CachePutEvict)->Arg(64)->Arg(256)->Arg(1024);
