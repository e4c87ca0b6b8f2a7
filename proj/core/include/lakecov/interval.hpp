#pragma once

#include <string>
#include <vector>

#include "lakecov/predicate.hpp"
#include "lakecov/schema.hpp"

namespace lakecov {

// Closed value range a column can take; bounds every interval dimension.
struct ColumnDomain {
  Value min;
  Value max;
};

using Domains = std::vector<ColumnDomain>;  // aligned with schema columns

Domains check_domains(const TableSchema& schema, Domains domains);

struct DimBound {
  Value value;
  bool inclusive = true;
};

struct DimInterval {
  DimBound lo;
  DimBound hi;
};

// A conjunctive predicate as a box over the schema's columns. Columns the
// predicate never mentions span their whole domain, so bounds are always
// finite. is_false marks the canonical empty box (dims left empty).
struct IntervalPredicate {
  std::vector<DimInterval> dims;
  bool is_false = false;
};

IntervalPredicate false_interval();
IntervalPredicate full_interval(const TableSchema& schema, const Domains& domains);

// Folds a pure conjunction of <col op value> terms into per-column bound
// tightening. Strict bounds on Int and Date columns become closed via a unit
// step; Float and Text keep exclusivity flags. Contradictions (including
// values outside the column domain) collapse to the false marker. Anything
// non-conjunctive, a != term, or a column-to-column term throws
// NotCacheableError.
IntervalPredicate to_interval(const CnfPredicate& p, const TableSchema& schema,
                              const Domains& domains);

// True iff a's box lies inside b's on every dimension, honoring inclusivity.
// A false-marked a is contained in everything.
bool contains_interval(const IntervalPredicate& a, const IntervalPredicate& b);

bool interval_equal(const IntervalPredicate& a, const IntervalPredicate& b);

// Product of dimension widths (upper minus lower, ignoring inclusivity).
// Text dimensions have no metric; they contribute 1 when non-degenerate and
// 0 when collapsed to a single value. False-marked intervals have volume 0.
double interval_volume(const IntervalPredicate& iv);

// One-field serialization for snapshot rows: dims as value:flag pairs.
std::string interval_to_text(const IntervalPredicate& iv);

}  // namespace lakecov
