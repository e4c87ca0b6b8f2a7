#include "lakecov/workload.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

namespace lakecov {

std::string to_string(QueryShape s) {
  switch (s) {
    case QueryShape::ConjRanges: return "conj-ranges";
    case QueryShape::Cnf: return "cnf";
    case QueryShape::Needle: return "needle";
  }
  throw ContractError("unreachable shape");
}

QueryShape query_shape_from_string(const std::string& s) {
  if (s == "conj-ranges") return QueryShape::ConjRanges;
  if (s == "cnf") return QueryShape::Cnf;
  if (s == "needle") return QueryShape::Needle;
  throw ParseError("unknown query shape: " + s);
}

void check_config(const BenchConfig& cfg) {
  if (cfg.table.empty()) throw ContractError("empty table name");
  if (cfg.columns < 1 || cfg.records < 1 || cfg.files < 1 || cfg.queries < 1)
    throw ContractError("counts must be at least 1");
  if (cfg.records < cfg.files) throw ContractError("need at least one record per file");
  if (cfg.entries_per_file < 1) throw ContractError("entries_per_file must be at least 1");
  if (cfg.columns_per_predicate < 1 || cfg.columns_per_predicate > cfg.columns)
    throw ContractError("columns_per_predicate out of range");
  if (cfg.range_fraction < 0 || cfg.range_fraction > 1)
    throw ContractError("range_fraction must be in [0,1]");
  if (cfg.nested_fraction < 0 || cfg.nested_fraction > 1)
    throw ContractError("nested_fraction must be in [0,1]");
  if (cfg.k_multiplier <= 0) throw ContractError("k_multiplier must be positive");
  if (cfg.value_min > cfg.value_max) throw ContractError("empty value domain");
  if (cfg.zipf_s < 0) throw ContractError("zipf_s must be non-negative");
}

namespace {

std::string bench_file_key(const std::string& table, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "file%06zu", i);
  return table_data_prefix(table) + buf;
}

std::string bench_column(std::size_t i) { return "c" + std::to_string(i); }

// Draws values in [value_min, value_max]; zipf_s > 0 skews rank-style
// toward the low end through 1000 inverse-CDF buckets.
class ValueSource {
 public:
  ValueSource(const BenchConfig& cfg, std::mt19937_64& rng) : rng_(rng) {
    lo_ = cfg.value_min;
    hi_ = cfg.value_max;
    if (cfg.zipf_s > 0) {
      std::size_t n = std::min<std::size_t>(1000, std::size_t(hi_ - lo_) + 1);
      cumulative_.resize(n);
      double sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += 1.0 / std::pow(double(k + 1), cfg.zipf_s);
        cumulative_[k] = sum;
      }
      for (auto& c : cumulative_) c /= sum;
    }
  }

  std::int64_t draw() {
    if (cumulative_.empty())
      return std::uniform_int_distribution<std::int64_t>(lo_, hi_)(rng_);
    double u = std::uniform_real_distribution<double>(0, 1)(rng_);
    std::size_t k = std::size_t(std::lower_bound(cumulative_.begin(), cumulative_.end(), u) -
                                cumulative_.begin());
    if (k >= cumulative_.size()) k = cumulative_.size() - 1;
    // Bucket k owns an equal slice of the domain; land uniformly inside it.
    double span = double(hi_ - lo_) + 1;
    auto lo = lo_ + std::int64_t(span * double(k) / double(cumulative_.size()));
    auto hi = lo_ + std::int64_t(span * double(k + 1) / double(cumulative_.size())) - 1;
    if (hi < lo) hi = lo;
    return std::uniform_int_distribution<std::int64_t>(lo, std::min(hi, hi_))(rng_);
  }

 private:
  std::mt19937_64& rng_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::vector<double> cumulative_;
};

TableSchema bench_schema(const BenchConfig& cfg) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < cfg.columns; ++i) cols.push_back({bench_column(i), ValueKind::Int});
  return TableSchema(cols);
}

Term range_lo(const std::string& col, std::int64_t v) { return {col, Op::Ge, Value::of_int(v)}; }
Term range_hi(const std::string& col, std::int64_t v) { return {col, Op::Le, Value::of_int(v)}; }

}  // namespace

Lake generate_lake(const BenchConfig& cfg, ObjectStore& store) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  ValueSource values(cfg, rng);
  std::vector<Tuple> rows(cfg.records);
  for (auto& row : rows) {
    row.values.reserve(cfg.columns);
    for (std::size_t c = 0; c < cfg.columns; ++c)
      row.values.push_back(Value::of_int(values.draw()));
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  Lake lake(cfg.table, bench_schema(cfg));
  for (std::size_t f = 0; f < cfg.files; ++f) {
    LakeFile file;
    file.key = bench_file_key(cfg.table, f);
    for (std::size_t i = f; i < rows.size(); i += cfg.files) file.tuples.push_back(rows[i]);
    lake.add_file(std::move(file));
  }
  persist_lake(lake, store);
  return lake;
}

std::vector<Query> generate_workload(const BenchConfig& cfg, const Lake& lake) {
  check_config(cfg);
  if (lake.schema().width() < cfg.columns_per_predicate)
    throw ContractError("lake is narrower than columns_per_predicate");
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);  // decoupled from the lake stream
  std::uniform_real_distribution<double> unit(0, 1);
  double span = double(cfg.value_max - cfg.value_min) + 1;
  std::int64_t max_width = std::max<std::int64_t>(1, std::int64_t(2 * cfg.range_fraction * span));

  // Boxes issued so far, for drawing nested queries: column index -> [lo,hi].
  std::vector<std::vector<std::pair<std::size_t, std::pair<std::int64_t, std::int64_t>>>> anchors;
  std::vector<std::size_t> col_order(lake.schema().width());
  std::iota(col_order.begin(), col_order.end(), 0);

  std::vector<Query> out;
  for (std::size_t qi = 0; qi < cfg.queries; ++qi) {
    Query q;
    switch (cfg.shape) {
      case QueryShape::ConjRanges: {
        bool nested = !anchors.empty() &&
                      (cfg.anchors_first
                           ? double(qi) >= (1.0 - cfg.nested_fraction) * double(cfg.queries)
                           : unit(rng) < cfg.nested_fraction);
        if (nested) {
          auto& anchor = anchors[std::uniform_int_distribution<std::size_t>(
              0, anchors.size() - 1)(rng)];
          for (auto& [col, range] : anchor) {
            auto [lo, hi] = range;
            std::int64_t slack = (hi - lo) / 4;
            std::int64_t nlo = lo + std::uniform_int_distribution<std::int64_t>(0, slack)(rng);
            std::int64_t nhi = hi - std::uniform_int_distribution<std::int64_t>(0, slack)(rng);
            if (nhi < nlo) nhi = nlo;
            q.predicate.push_back({range_lo(bench_column(col), nlo)});
            q.predicate.push_back({range_hi(bench_column(col), nhi)});
          }
          break;
        }
        std::shuffle(col_order.begin(), col_order.end(), rng);
        std::vector<std::pair<std::size_t, std::pair<std::int64_t, std::int64_t>>> box;
        for (std::size_t k = 0; k < cfg.columns_per_predicate; ++k) {
          std::size_t col = col_order[k];
          std::int64_t width = std::uniform_int_distribution<std::int64_t>(0, max_width)(rng);
          std::int64_t lo = std::uniform_int_distribution<std::int64_t>(
              cfg.value_min, std::max(cfg.value_min, cfg.value_max - width))(rng);
          std::int64_t hi = std::min(cfg.value_max, lo + width);
          box.push_back({col, {lo, hi}});
          q.predicate.push_back({range_lo(bench_column(col), lo)});
          q.predicate.push_back({range_hi(bench_column(col), hi)});
        }
        std::sort(box.begin(), box.end());
        anchors.push_back(std::move(box));
        break;
      }
      case QueryShape::Cnf: {
        for (std::size_t k = 0; k < cfg.columns_per_predicate; ++k) {
          Clause clause;
          std::size_t terms = 1 + (unit(rng) < 0.4 ? 1 : 0);
          for (std::size_t t = 0; t < terms; ++t) {
            std::size_t col =
                std::uniform_int_distribution<std::size_t>(0, lake.schema().width() - 1)(rng);
            std::int64_t v =
                std::uniform_int_distribution<std::int64_t>(cfg.value_min, cfg.value_max)(rng);
            Op op;
            double pick = unit(rng);
            if (pick < 0.4)
              op = Op::Eq;
            else if (pick < 0.55)
              op = Op::Le;
            else if (pick < 0.7)
              op = Op::Ge;
            else if (pick < 0.85)
              op = Op::Lt;
            else
              op = Op::Gt;
            clause.push_back({bench_column(col), op, Value::of_int(v)});
          }
          q.predicate.push_back(std::move(clause));
        }
        break;
      }
      case QueryShape::Needle: {
        const auto& files = lake.files();
        const LakeFile& f =
            files[std::uniform_int_distribution<std::size_t>(0, files.size() - 1)(rng)];
        const Tuple& row =
            f.tuples[std::uniform_int_distribution<std::size_t>(0, f.tuples.size() - 1)(rng)];
        std::size_t col =
            std::uniform_int_distribution<std::size_t>(0, lake.schema().width() - 1)(rng);
        q.predicate.push_back({Term{bench_column(col), Op::Eq, row.values[col]}});
        break;
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

namespace {

bool tuple_less(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.values.size() && i < b.values.size(); ++i) {
    int c = a.values[i].compare(b.values[i]);
    if (c != 0) return c < 0;
  }
  return a.values.size() < b.values.size();
}

bool same_rows(std::vector<Tuple> a, std::vector<Tuple> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), tuple_less);
  std::sort(b.begin(), b.end(), tuple_less);
  return a == b;
}

void report_row(std::ostream& out, std::size_t qi, const std::string& mode, const ExecReport& r) {
  out << qi << '\t' << mode << '\t' << r.gets << '\t' << r.coverage_size << '\t'
      << (r.cache_hit ? 1 : 0) << '\t' << (r.fallback_taken ? 1 : 0) << '\t'
      << r.elapsed.count() << '\n';
}

}  // namespace

ScenarioSummary run_scenario(const BenchConfig& cfg, ObjectStore& store, std::ostream& report) {
  check_config(cfg);
  Lake lake = load_lake(store, cfg.table);
  store.set_latency(std::chrono::microseconds(cfg.latency_us));

  RootIndex root;
  bool indexed = cfg.mode == ExecMode::Indexed || cfg.mode == ExecMode::IndexedCached;
  if (indexed) root = load_root_index(store, cfg.table, lake.schema());

  std::optional<CoverageCache> cache;
  bool cached = cfg.mode == ExecMode::Cached || cfg.mode == ExecMode::CachedSpatial ||
                cfg.mode == ExecMode::IndexedCached;
  if (cached) {
    Domains domains;
    for (std::size_t i = 0; i < lake.schema().width(); ++i)
      domains.push_back({Value::of_int(cfg.value_min), Value::of_int(cfg.value_max)});
    EvictionPolicy policy;
    policy.kind = cfg.policy;
    policy.capacity = cfg.cache_capacity;
    policy.w1 = cfg.w1;
    policy.w2 = cfg.w2;
    if (cfg.cache_capacity == 0) policy.kind = PolicyKind::Unlimited;
    CacheBackend backend =
        cfg.mode == ExecMode::CachedSpatial ? CacheBackend::Spatial : cfg.backend;
    cache.emplace(lake.schema(), domains, backend, policy, lake.data_prefix());
  }

  EngineContext base_ctx;
  base_ctx.store = &store;
  base_ctx.schema = &lake.schema();
  base_ctx.table = cfg.table;

  EngineContext mode_ctx = base_ctx;
  mode_ctx.root = indexed ? &root : nullptr;
  mode_ctx.cache = cache ? &*cache : nullptr;
  mode_ctx.k_threshold = cfg.k_multiplier * double(lake.files().size());
  mode_ctx.table_rows = double(lake.total_rows());

  auto workload = generate_workload(cfg, lake);
  ScenarioSummary sum;
  sum.queries = workload.size();
  report << "query\tmode\tgets\tcoverage\thit\tfallback\telapsed_us\n";
  for (std::size_t qi = 0; qi < workload.size(); ++qi) {
    ExecReport base = execute_query(workload[qi], ExecMode::Baseline, base_ctx);
    sum.baseline_gets += base.gets;
    sum.baseline_elapsed_us += double(base.elapsed.count());
    report_row(report, qi, "baseline", base);
    if (cfg.mode == ExecMode::Baseline) {
      sum.mode_gets += base.gets;
      sum.mode_elapsed_us += double(base.elapsed.count());
      continue;
    }
    ExecReport r = execute_query(workload[qi], cfg.mode, mode_ctx);
    sum.mode_gets += r.gets;
    sum.mode_elapsed_us += double(r.elapsed.count());
    if (r.cache_hit) ++sum.hits;
    if (r.fallback_taken) ++sum.fallbacks;
    report_row(report, qi, to_string(cfg.mode), r);
    if (!same_rows(base.rows, r.rows))
      throw CorrectnessError("rows differ from baseline on query " + std::to_string(qi));
  }
  sum.hit_rate = sum.queries ? double(sum.hits) / double(sum.queries) : 0;
  sum.read_reduction_pct =
      sum.baseline_gets
          ? 100.0 * (1.0 - double(sum.mode_gets) / double(sum.baseline_gets))
          : 0;
  report << "# queries\t" << sum.queries << '\n';
  report << "# baseline_gets\t" << sum.baseline_gets << '\n';
  report << "# mode_gets\t" << sum.mode_gets << '\n';
  report << "# read_reduction_pct\t" << sum.read_reduction_pct << '\n';
  report << "# hit_rate\t" << sum.hit_rate << '\n';
  report << "# fallbacks\t" << sum.fallbacks << '\n';
  report << "# mean_baseline_elapsed_us\t"
         << (sum.queries ? sum.baseline_elapsed_us / double(sum.queries) : 0) << '\n';
  report << "# mean_mode_elapsed_us\t"
         << (sum.queries ? sum.mode_elapsed_us / double(sum.queries) : 0) << '\n';
  return sum;
}

}  // namespace lakecov
