#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "lakecov/cache.hpp"
#include "lakecov/index.hpp"
#include "lakecov/planner.hpp"

namespace lakecov {

enum class ExecMode { Baseline, Indexed, Cached, CachedSpatial, IndexedCached };

std::string to_string(ExecMode m);
ExecMode exec_mode_from_string(const std::string& s);

struct ExecReport {
  std::vector<Tuple> rows;
  std::uint64_t gets = 0;          // store read-counter delta
  std::size_t coverage_size = 0;   // data files scanned
  bool fallback_taken = false;     // plan cost exceeded the threshold
  bool cache_hit = false;
  std::chrono::microseconds elapsed{0};
  double plan_cost = 0;            // greedy plan cost on the indexed paths
  bool plan_executed = false;
};

// Baseline needs store and schema only; the indexed paths add root (and use
// table_rows when the root cannot supply it); the cached paths add cache.
struct EngineContext {
  ObjectStore* store = nullptr;
  const TableSchema* schema = nullptr;
  std::string table;
  const RootIndex* root = nullptr;
  CoverageCache* cache = nullptr;
  double k_threshold = 0;  // 0 picks the file count at query time
  double table_rows = 0;   // 0 derives the row count from the root index
};

// Pure conjunction of single value terms, no !=; the only shape the cache
// can hold as one interval box.
bool cache_eligible(const Query& q);

// Baseline: read and scan every data file. Indexed: estimate each clause,
// solve greedily, and when the plan cost stays within the threshold compute
// the coverage through the index and scan only that; otherwise fall back to
// Baseline. Cached and CachedSpatial (which differ only in how the supplied
// cache was built): containment lookup first; on a hit scan the returned
// files, on a miss scan everything and insert the observed tight coverage.
// IndexedCached tries the cache, then the indexed path, and feeds misses
// back into the cache. Every mode returns the same rows for the same query.
ExecReport execute_query(const Query& q, ExecMode mode, const EngineContext& ctx);

}  // namespace lakecov
