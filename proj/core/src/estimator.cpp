#include "lakecov/estimator.hpp"

#include <algorithm>
#include <cmath>

namespace lakecov {

double records_to_files(double records, double file_count) {
  if (records < 0) throw ContractError("negative record count");
  if (file_count < 1) throw ContractError("file_count must be >= 1");
  return file_count * (1.0 - std::pow((file_count - 1.0) / file_count, records));
}

double intersect_records(double r1, double r2, double table_rows) {
  if (table_rows < 1) throw ContractError("table_rows must be >= 1");
  return std::floor(r1 * r2 / table_rows);
}

namespace {

// Fraction of a file's [min,max] value span that can satisfy <op v>, under a
// uniform spread. Text spans admit no fraction; any overlapping file counts
// whole.
double overlap_fraction(Op op, const Value& v, const Value& min, const Value& max) {
  if (v.kind() == ValueKind::Text) return 1.0;
  double lo = min.numeric(), hi = max.numeric(), x = v.numeric();
  if (hi <= lo) return op_holds(op, min.compare(v)) ? 1.0 : 0.0;
  double f = 0;
  switch (op) {
    case Op::Gt:
    case Op::Ge: f = (hi - x) / (hi - lo); break;
    case Op::Lt:
    case Op::Le: f = (x - lo) / (hi - lo); break;
    default: throw Error("overlap_fraction is for range ops");
  }
  return std::clamp(f, 0.0, 1.0);
}

double estimate_term_records(const Term& term, const RootIndex& root) {
  if (term.rhs_is_column()) {
    // No histogram captures cross-column correlation; take the total count of
    // the lower-cardinality side.
    const std::string& other = term.rhs_column();
    bool lhs_smaller = root.total_cntd(term.lhs) <= root.total_cntd(other);
    return double(root.total_cnt(lhs_smaller ? term.lhs : other));
  }
  const Value& v = term.rhs_value();
  switch (term.op) {
    case Op::Eq: {
      double r = 0;
      for (const auto* e : root.for_column(term.lhs))
        if (e->min <= v && v <= e->max) r += double(e->cnt) / double(e->cntd);
      return r;
    }
    case Op::Ne: return double(root.total_cnt(term.lhs));
    case Op::Gt:
    case Op::Ge:
    case Op::Lt:
    case Op::Le: {
      double r = 0;
      for (const auto& key : prune_index_files(term, root)) {
        for (const auto* e : root.for_column(term.lhs))
          if (e->file == key) r += double(e->cnt) * overlap_fraction(term.op, v, e->min, e->max);
      }
      return r;
    }
  }
  throw Error("bad Op");
}

double estimate_term_cost(const Term& term, const RootIndex& root) {
  if (term.rhs_is_column())
    return double(root.file_count(term.lhs)) + double(root.file_count(term.rhs_column()));
  return double(prune_index_files(term, root).size());
}

}  // namespace

PlanEstimate estimate_clause(const Clause& clause, const RootIndex& root, double table_rows) {
  for (const auto& term : clause) {
    bool usable = root.has_column(term.lhs) &&
                  (!term.rhs_is_column() || root.has_column(term.rhs_column()));
    if (!usable) return {kInfiniteCost, NumericResult::everything()};
  }
  double cost = 0, records = 0;
  for (const auto& term : clause) {
    cost += estimate_term_cost(term, root);
    records += estimate_term_records(term, root);
  }
  return {cost, NumericResult::of(std::min(records, table_rows))};
}

BqcppInput build_bqcpp_input(const Query& q, const RootIndex& root, double table_rows,
                             double file_count) {
  BqcppInput in;
  in.table_rows = table_rows;
  in.file_count = file_count;
  for (const auto& clause : q.predicate)
    in.clauses.push_back({estimate_clause(clause, root, table_rows)});
  return in;
}

double regression_adjust(const std::vector<std::pair<double, double>>& pairs, double x) {
  if (pairs.size() < 2) throw ContractError("need at least two pairs");
  double sx = 0, sy = 0;
  for (const auto& [px, py] : pairs) {
    sx += px;
    sy += py;
  }
  double mx = sx / double(pairs.size()), my = sy / double(pairs.size());
  double sxx = 0, sxy = 0;
  for (const auto& [px, py] : pairs) {
    sxx += (px - mx) * (px - mx);
    sxy += (px - mx) * (py - my);
  }
  if (sxx == 0) throw ContractError("degenerate fit: all estimates equal");
  double a = sxy / sxx;
  double b = my - a * mx;
  return a * x + b;
}

}  // namespace lakecov
