#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lakecov/engine.hpp"
#include "lakecov/lake.hpp"

namespace lakecov {

// ConjRanges: conjunctive per-column ranges (the cache-friendly shape).
// Cnf: multi-clause predicates with disjunctions (the planner-friendly
// shape). Needle: equality on values planted in the data, so coverage is a
// handful of files.
enum class QueryShape { ConjRanges, Cnf, Needle };

std::string to_string(QueryShape s);
QueryShape query_shape_from_string(const std::string& s);

struct BenchConfig {
  std::string table = "bench";
  std::size_t columns = 3;
  std::size_t records = 10000;
  std::size_t files = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> indexed_columns;  // empty means every column
  std::size_t entries_per_file = 1000;
  std::size_t queries = 100;
  QueryShape shape = QueryShape::ConjRanges;
  std::size_t columns_per_predicate = 3;
  double range_fraction = 0.1;   // mean range width as a fraction of the domain
  double nested_fraction = 0.0;  // queries drawn inside an earlier query's box
  bool anchors_first = false;    // emit all fresh boxes before any nested one
  ExecMode mode = ExecMode::Baseline;
  double k_multiplier = 1.0;     // threshold = multiplier * file count
  std::size_t cache_capacity = 0;  // 0 = unlimited
  PolicyKind policy = PolicyKind::Unlimited;
  double w1 = 0.5;
  double w2 = 0.5;
  CacheBackend backend = CacheBackend::List;
  std::uint64_t latency_us = 0;
  std::int64_t value_min = 0;
  std::int64_t value_max = 999;
  double zipf_s = 0.0;  // 0 = uniform; larger skews values toward value_min
};

void check_config(const BenchConfig& cfg);

// Uniform (or skewed) integer table, rows shuffled and dealt round-robin
// into equal-sized files, persisted to the store. Same seed, same bytes.
Lake generate_lake(const BenchConfig& cfg, ObjectStore& store);

// Deterministic query list; Needle draws values from the lake's own rows.
std::vector<Query> generate_workload(const BenchConfig& cfg, const Lake& lake);

struct ScenarioSummary {
  std::size_t queries = 0;
  std::uint64_t baseline_gets = 0;
  std::uint64_t mode_gets = 0;
  double baseline_elapsed_us = 0;
  double mode_elapsed_us = 0;
  std::size_t hits = 0;
  std::size_t fallbacks = 0;
  double hit_rate = 0;
  double read_reduction_pct = 0;
};

// Runs the workload under cfg.mode with a per-query Baseline shadow run,
// fails hard on any row mismatch, and writes per-query TSV rows plus a
// commented summary block to report.
ScenarioSummary run_scenario(const BenchConfig& cfg, ObjectStore& store, std::ostream& report);

}  // namespace lakecov
