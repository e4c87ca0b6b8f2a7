#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "lakecov/index.hpp"

namespace lakecov {

// Estimated plan result: a record count, or "everything" for clauses that
// cannot be narrowed (the sentinel folds as a neutral element and sizes to
// |F|).
struct NumericResult {
  bool all = false;
  double records = 0;

  static NumericResult everything() { return {true, 0}; }
  static NumericResult of(double r) { return {false, r}; }

  bool operator==(const NumericResult&) const = default;
};

template <class R>
struct PlanEstimateT {
  double cost = 0;  // index files to read; +inf when the clause is unusable
  R result{};
};

template <class R>
struct BqcppInputT {
  std::vector<std::vector<PlanEstimateT<R>>> clauses;  // >=1 plan per clause
  double table_rows = 0;
  double file_count = 0;
};

using PlanEstimate = PlanEstimateT<NumericResult>;
using BqcppInput = BqcppInputT<NumericResult>;

constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// Expected non-empty bins after throwing R balls into file_count bins:
// |F| * (1 - ((|F|-1)/|F|)^R).
double records_to_files(double records, double file_count);

// floor(r1 * r2 / table_rows).
double intersect_records(double r1, double r2, double table_rows);

// Cost: per value term, the pruned index-file count; per column-column term,
// both columns' file counts. Result: equality terms sum cnt/cntd over
// matching root entries; range terms sum cnt weighted by the uniform overlap
// fraction of [min,max]; != and column-column terms take the total cnt of the
// smaller-cardinality column. The sum is capped at table_rows. Any term on an
// unindexed column makes the clause (+inf, everything).
PlanEstimate estimate_clause(const Clause& clause, const RootIndex& root, double table_rows);

BqcppInput build_bqcpp_input(const Query& q, const RootIndex& root, double table_rows,
                             double file_count);

// Ordinary least squares y = a*x + b over (estimated, actual) pairs,
// evaluated at x. Throws ContractError on fewer than two pairs or a
// degenerate fit (all estimates equal).
double regression_adjust(const std::vector<std::pair<double, double>>& pairs, double x);

}  // namespace lakecov
