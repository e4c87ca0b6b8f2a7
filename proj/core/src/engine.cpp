#include "lakecov/engine.hpp"

#include <algorithm>

#include "lakecov/lake.hpp"
#include "lakecov/tsv.hpp"

namespace lakecov {

std::string to_string(ExecMode m) {
  switch (m) {
    case ExecMode::Baseline: return "baseline";
    case ExecMode::Indexed: return "indexed";
    case ExecMode::Cached: return "cached";
    case ExecMode::CachedSpatial: return "cached-spatial";
    case ExecMode::IndexedCached: return "indexed-cached";
  }
  throw ContractError("unreachable mode");
}

ExecMode exec_mode_from_string(const std::string& s) {
  if (s == "baseline") return ExecMode::Baseline;
  if (s == "indexed") return ExecMode::Indexed;
  if (s == "cached") return ExecMode::Cached;
  if (s == "cached-spatial") return ExecMode::CachedSpatial;
  if (s == "indexed-cached") return ExecMode::IndexedCached;
  throw ParseError("unknown mode: " + s);
}

bool cache_eligible(const Query& q) {
  for (const auto& clause : q.predicate) {
    if (clause.size() != 1) return false;
    const Term& t = clause.front();
    if (t.rhs_is_column() || t.op == Op::Ne) return false;
  }
  return true;
}

namespace {

// Reads the given files in key order, collecting matching (projected) rows;
// tight (when wanted) receives the files that yielded at least one row.
std::vector<Tuple> scan_files(const std::vector<std::string>& keys, const Query& q,
                              const EngineContext& ctx, CoverageSet* tight) {
  std::vector<Tuple> rows;
  for (const auto& key : keys) {
    bool any = false;
    for (auto& t : decode_lake_file(*ctx.schema, ctx.store->get(key))) {
      if (!satisfies(*ctx.schema, q.predicate, t)) continue;
      rows.push_back(project(*ctx.schema, q, t));
      any = true;
    }
    if (any && tight) tight->insert(key);
  }
  return rows;
}

std::vector<std::string> universe(const EngineContext& ctx) {
  return ctx.store->list(table_data_prefix(ctx.table));
}

void run_baseline(const Query& q, const EngineContext& ctx, ExecReport& r, CoverageSet* tight) {
  auto keys = universe(ctx);
  r.coverage_size = keys.size();
  r.rows = scan_files(keys, q, ctx, tight);
}

double derived_table_rows(const EngineContext& ctx) {
  if (ctx.table_rows > 0) return ctx.table_rows;
  if (!ctx.root) throw ContractError("no row count and no root index to derive one");
  double best = 0;
  for (const auto& col : ctx.root->columns())
    best = std::max(best, double(ctx.root->total_cnt(col)));
  if (best < 1) throw ContractError("root index is empty; pass the row count");
  return best;
}

void run_indexed(const Query& q, const EngineContext& ctx, ExecReport& r, CoverageSet* tight) {
  if (!ctx.root) throw ContractError("indexed mode needs a root index");
  auto keys = universe(ctx);
  double file_count = double(keys.size());
  if (file_count < 1) throw ContractError("empty lake");
  double table_rows = derived_table_rows(ctx);
  double k = ctx.k_threshold > 0 ? ctx.k_threshold : file_count;
  auto input = build_bqcpp_input(q, *ctx.root, table_rows, file_count);
  auto sg = numeric_semigroup(table_rows, file_count);
  CoveragePlan plan = solve_greedy(input, sg);
  r.plan_cost = plan.total_cost;
  if (decide(plan.total_cost, k) == Decision::Fallback) {
    r.fallback_taken = true;
    run_baseline(q, ctx, r, tight);
    return;
  }
  r.plan_executed = true;
  std::vector<Clause> chosen;
  for (const auto& ref : plan.chosen) chosen.push_back(q.predicate.at(ref.clause));
  CoverageSet cov = coverage_by_index(chosen, *ctx.root, *ctx.store, keys);
  r.coverage_size = cov.size();
  std::vector<std::string> cov_keys(cov.begin(), cov.end());
  r.rows = scan_files(cov_keys, q, ctx, tight);
}

// Cache lookup; on a miss the caller scans and this function's second half
// (store_miss) records what the scan proved.
bool try_cache(const Query& q, const EngineContext& ctx, ExecReport& r,
               IntervalPredicate& interval, bool& satisfiable) {
  if (!ctx.cache) throw ContractError("cached mode needs a cache");
  if (!cache_eligible(q)) return false;
  interval = ctx.cache->make_interval(q.predicate);
  if (interval.is_false) {
    // No tuple anywhere can satisfy the predicate; the empty set covers it.
    satisfiable = false;
    return true;
  }
  auto cov = ctx.cache->get_min_coverage(interval, *ctx.store);
  if (!cov) return false;
  r.cache_hit = true;
  r.coverage_size = cov->size();
  std::vector<std::string> keys(cov->begin(), cov->end());
  r.rows = scan_files(keys, q, ctx, nullptr);
  return true;
}

}  // namespace

ExecReport execute_query(const Query& q, ExecMode mode, const EngineContext& ctx) {
  if (!ctx.store || !ctx.schema) throw ContractError("engine needs a store and a schema");
  check_predicate(*ctx.schema, q.predicate);
  ExecReport r;
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t reads0 = ctx.store->read_count();
  switch (mode) {
    case ExecMode::Baseline:
      run_baseline(q, ctx, r, nullptr);
      break;
    case ExecMode::Indexed:
      run_indexed(q, ctx, r, nullptr);
      break;
    case ExecMode::Cached:
    case ExecMode::CachedSpatial:
    case ExecMode::IndexedCached: {
      IntervalPredicate interval;
      bool satisfiable = true;
      if (!try_cache(q, ctx, r, interval, satisfiable)) {
        bool eligible = cache_eligible(q);
        CoverageSet tight;
        CoverageSet* observe = eligible ? &tight : nullptr;
        if (mode == ExecMode::IndexedCached)
          run_indexed(q, ctx, r, observe);
        else
          run_baseline(q, ctx, r, observe);
        if (eligible) ctx.cache->put(interval, std::move(tight), ctx.store->current_tick());
      } else if (!satisfiable) {
        r.coverage_size = 0;
      }
      break;
    }
  }
  r.gets = ctx.store->read_count() - reads0;
  r.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  return r;
}

}  // namespace lakecov
