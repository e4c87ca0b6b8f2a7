#include "lakecov/coverage.hpp"

#include "lakecov/tsv.hpp"

namespace lakecov {

namespace {

bool file_has_match(const TableSchema& schema, const CnfPredicate& pred, std::string_view bytes) {
  bool found = false;
  // Decode row by row so the scan can stop at the first match.
  for_each_tsv_row(bytes, [&](std::size_t lineno, const std::vector<std::string_view>& fields) {
    if (found || lineno == 1) return;
    Tuple t;
    t.values.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
      t.values.push_back(Value::from_tsv(schema.column(i).kind, std::string(fields[i])));
    if (satisfies(schema, pred, t)) found = true;
  });
  return found;
}

}  // namespace

CoverageSet naive_tight_coverage(const Query& q, const Lake& lake, ObjectStore& store) {
  if (lake.files().empty()) throw ContractError("empty lake");
  check_predicate(lake.schema(), q.predicate);
  CoverageSet tc;
  for (const auto& f : lake.files()) {
    std::string bytes = store.get(f.key);
    if (file_has_match(lake.schema(), q.predicate, bytes)) tc.insert(f.key);
  }
  return tc;
}

bool is_coverage(const CoverageSet& x, const Query& q, const Lake& lake, ObjectStore& store) {
  for (const auto& key : x)
    if (!lake.find(key)) throw ContractError("coverage references unknown file: " + key);
  check_predicate(lake.schema(), q.predicate);
  bool covered = true;
  for (const auto& f : lake.files()) {
    std::string bytes = store.get(f.key);
    if (!x.contains(f.key) && file_has_match(lake.schema(), q.predicate, bytes)) covered = false;
  }
  return covered;
}

double tightness_degree(const CoverageSet& x, const Query& q, const Lake& lake,
                        ObjectStore& store) {
  if (!is_coverage(x, q, lake, store)) throw ContractError("x is not a coverage set");
  CoverageSet tc = naive_tight_coverage(q, lake, store);
  double f = double(lake.files().size());
  if (double(tc.size()) >= f) return 0.0;
  return 1.0 - (double(x.size()) - double(tc.size())) / (f - double(tc.size()));
}

double coverage_degree(const Query& q, const Lake& lake, ObjectStore& store) {
  if (lake.files().empty()) throw ContractError("empty lake");
  CoverageSet tc = naive_tight_coverage(q, lake, store);
  return double(tc.size()) / double(lake.files().size());
}

}  // namespace lakecov
