#pragma once

// Shared nine-row metrics table: three files, three rows each, columns
// date/metric/val. Small enough to verify every assertion by hand.

#include <string>

#include "lakecov/index.hpp"
#include "lakecov/lake.hpp"
#include "lakecov/predicate.hpp"

namespace fixtures {

using namespace lakecov;

inline const std::string kF201 = "data/metrics/file201";
inline const std::string kF170 = "data/metrics/file170";
inline const std::string kF051 = "data/metrics/file051";

inline TableSchema metrics_schema() {
  return TableSchema({{"date", ValueKind::Date},
                      {"metric", ValueKind::Text},
                      {"val", ValueKind::Int}});
}

inline Tuple row(const std::string& date, const std::string& metric, std::int64_t val) {
  return Tuple{{Value::of_date(date), Value::of_text(metric), Value::of_int(val)}};
}

inline Lake metrics_lake(ObjectStore& store) {
  Lake lake("metrics", metrics_schema());
  lake.add_file({kF201,
                 0,
                 {row("2020-02-10", "cpu", 47), row("2020-02-14", "cpu", 58),
                  row("2020-02-18", "memory", 11)}});
  lake.add_file({kF170,
                 0,
                 {row("2020-02-16", "memory", 8), row("2020-02-20", "cpu", 88),
                  row("2020-02-21", "cpu", 66)}});
  lake.add_file({kF051,
                 0,
                 {row("2020-03-13", "memory", 6), row("2020-03-22", "cpu", 92),
                  row("2020-03-28", "cpu", 71)}});
  persist_lake(lake, store);
  return lake;
}

// val chunked [4,5] and date [5,4] gives two index files per column whose
// root rows are easy to check by hand.
inline RootIndex metrics_index(const Lake& lake, ObjectStore& store) {
  IndexBuildOptions opts;
  opts.explicit_chunks["val"] = {4, 5};
  opts.explicit_chunks["date"] = {5, 4};
  return build_index(lake, {"val", "date"}, opts, store);
}

inline Term eq_int(const std::string& col, std::int64_t v) {
  return Term::cmp(col, Op::Eq, Value::of_int(v));
}

inline Term eq_date(const std::string& col, const std::string& iso) {
  return Term::cmp(col, Op::Eq, Value::of_date(iso));
}

}  // namespace fixtures
