#include "lakecov/interval.hpp"

#include <limits>
#include <optional>

namespace lakecov {

namespace {

// Successor/predecessor on unit-step kinds; nullopt when the step would
// leave the representable range (the interval is then empty).
std::optional<Value> step_up(const Value& v) {
  if (v.kind() == ValueKind::Int) {
    if (v.as_int() == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return Value::of_int(v.as_int() + 1);
  }
  if (v.as_date().days == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return Value::of_date(Date{v.as_date().days + 1});
}

std::optional<Value> step_down(const Value& v) {
  if (v.kind() == ValueKind::Int) {
    if (v.as_int() == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
    return Value::of_int(v.as_int() - 1);
  }
  if (v.as_date().days == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
  return Value::of_date(Date{v.as_date().days - 1});
}

bool unit_step(ValueKind k) { return k == ValueKind::Int || k == ValueKind::Date; }

// Keep the tighter (greater) lower bound; on equal values exclusive wins.
void tighten_lower(DimBound& cur, const DimBound& in) {
  int c = in.value.compare(cur.value);
  if (c > 0 || (c == 0 && cur.inclusive && !in.inclusive)) cur = in;
}

void tighten_upper(DimBound& cur, const DimBound& in) {
  int c = in.value.compare(cur.value);
  if (c < 0 || (c == 0 && cur.inclusive && !in.inclusive)) cur = in;
}

// False when the dimension admits no value; normalizes strict unit-step
// bounds to closed ones along the way.
bool normalize_dim(ValueKind kind, DimInterval& d) {
  if (unit_step(kind)) {
    if (!d.lo.inclusive) {
      auto up = step_up(d.lo.value);
      if (!up) return false;
      d.lo = {*up, true};
    }
    if (!d.hi.inclusive) {
      auto down = step_down(d.hi.value);
      if (!down) return false;
      d.hi = {*down, true};
    }
  }
  int c = d.lo.value.compare(d.hi.value);
  if (c > 0) return false;
  if (c == 0 && (!d.lo.inclusive || !d.hi.inclusive)) return false;
  return true;
}

}  // namespace

Domains check_domains(const TableSchema& schema, Domains domains) {
  if (domains.size() != schema.width())
    throw ContractError("domain count does not match the schema");
  for (std::size_t i = 0; i < domains.size(); ++i) {
    ValueKind k = schema.columns()[i].kind;
    if (domains[i].min.kind() != k || domains[i].max.kind() != k)
      throw TypeError("domain kind mismatch on column " + schema.columns()[i].name);
    if (domains[i].min.compare(domains[i].max) > 0)
      throw ContractError("empty domain on column " + schema.columns()[i].name);
  }
  return domains;
}

IntervalPredicate false_interval() {
  IntervalPredicate iv;
  iv.is_false = true;
  return iv;
}

IntervalPredicate full_interval(const TableSchema& schema, const Domains& domains) {
  if (domains.size() != schema.width())
    throw ContractError("domain count does not match the schema");
  IntervalPredicate iv;
  for (const auto& d : domains) iv.dims.push_back({{d.min, true}, {d.max, true}});
  return iv;
}

IntervalPredicate to_interval(const CnfPredicate& p, const TableSchema& schema,
                              const Domains& domains) {
  check_predicate(schema, p);
  auto iv = full_interval(schema, domains);
  for (const auto& clause : p) {
    if (clause.size() != 1)
      throw NotCacheableError("disjunction cannot become one interval");
    const Term& t = clause.front();
    if (t.rhs_is_column()) throw NotCacheableError("column-to-column term");
    if (t.op == Op::Ne) throw NotCacheableError("!= punches a hole, not a box");
    auto& dim = iv.dims[schema.column_index(t.lhs)];
    const Value& v = t.rhs_value();
    switch (t.op) {
      case Op::Eq:
        tighten_lower(dim.lo, {v, true});
        tighten_upper(dim.hi, {v, true});
        break;
      case Op::Gt: tighten_lower(dim.lo, {v, false}); break;
      case Op::Ge: tighten_lower(dim.lo, {v, true}); break;
      case Op::Lt: tighten_upper(dim.hi, {v, false}); break;
      case Op::Le: tighten_upper(dim.hi, {v, true}); break;
      default: throw NotCacheableError("operator has no interval form");
    }
  }
  for (std::size_t i = 0; i < iv.dims.size(); ++i)
    if (!normalize_dim(schema.columns()[i].kind, iv.dims[i])) return false_interval();
  return iv;
}

bool contains_interval(const IntervalPredicate& a, const IntervalPredicate& b) {
  if (a.is_false) return true;
  if (b.is_false) return false;
  if (a.dims.size() != b.dims.size())
    throw ContractError("intervals span different schemas");
  for (std::size_t i = 0; i < a.dims.size(); ++i) {
    int lo = a.dims[i].lo.value.compare(b.dims[i].lo.value);
    if (lo < 0) return false;
    if (lo == 0 && a.dims[i].lo.inclusive && !b.dims[i].lo.inclusive) return false;
    int hi = a.dims[i].hi.value.compare(b.dims[i].hi.value);
    if (hi > 0) return false;
    if (hi == 0 && a.dims[i].hi.inclusive && !b.dims[i].hi.inclusive) return false;
  }
  return true;
}

bool interval_equal(const IntervalPredicate& a, const IntervalPredicate& b) {
  if (a.is_false || b.is_false) return a.is_false == b.is_false;
  if (a.dims.size() != b.dims.size()) return false;
  for (std::size_t i = 0; i < a.dims.size(); ++i) {
    const auto& x = a.dims[i];
    const auto& y = b.dims[i];
    if (x.lo.value.compare(y.lo.value) != 0 || x.lo.inclusive != y.lo.inclusive) return false;
    if (x.hi.value.compare(y.hi.value) != 0 || x.hi.inclusive != y.hi.inclusive) return false;
  }
  return true;
}

double interval_volume(const IntervalPredicate& iv) {
  if (iv.is_false) return 0;
  double v = 1;
  for (const auto& d : iv.dims) {
    if (d.lo.value.kind() == ValueKind::Text)
      v *= d.lo.value.compare(d.hi.value) < 0 ? 1 : 0;
    else
      v *= d.hi.value.numeric() - d.lo.value.numeric();
  }
  return v;
}

std::string interval_to_text(const IntervalPredicate& iv) {
  if (iv.is_false) return "false";
  std::string out;
  for (std::size_t i = 0; i < iv.dims.size(); ++i) {
    if (i) out += ";";
    const auto& d = iv.dims[i];
    out += d.lo.inclusive ? "[" : "(";
    out += d.lo.value.to_tsv();
    out += ",";
    out += d.hi.value.to_tsv();
    out += d.hi.inclusive ? "]" : ")";
  }
  return out;
}

}  // namespace lakecov
