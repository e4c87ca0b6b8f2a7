#include "lakecov/predicate.hpp"

namespace lakecov {

std::string to_string(Op op) {
  switch (op) {
    case Op::Eq: return "=";
    case Op::Ne: return "!=";
    case Op::Ge: return ">=";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Lt: return "<";
  }
  throw Error("bad Op");
}

Op op_from_string(const std::string& s) {
  if (s == "=" || s == "==") return Op::Eq;
  if (s == "!=" || s == "<>") return Op::Ne;
  if (s == ">=") return Op::Ge;
  if (s == "<=") return Op::Le;
  if (s == ">") return Op::Gt;
  if (s == "<") return Op::Lt;
  throw ParseError("unknown operator: " + s);
}

bool op_holds(Op op, int cmp) {
  switch (op) {
    case Op::Eq: return cmp == 0;
    case Op::Ne: return cmp != 0;
    case Op::Ge: return cmp >= 0;
    case Op::Le: return cmp <= 0;
    case Op::Gt: return cmp > 0;
    case Op::Lt: return cmp < 0;
  }
  throw Error("bad Op");
}

namespace {

void check_term(const TableSchema& schema, const Term& term) {
  ValueKind lk = schema.column_kind(term.lhs);
  ValueKind rk = term.rhs_is_column() ? schema.column_kind(term.rhs_column())
                                      : term.rhs_value().kind();
  if (lk != rk)
    throw TypeError("term on " + term.lhs + ": " + to_string(lk) + " vs " + to_string(rk));
}

}  // namespace

void check_predicate(const TableSchema& schema, const CnfPredicate& pred) {
  for (const auto& clause : pred) {
    if (clause.empty()) throw TypeError("empty clause");
    for (const auto& term : clause) check_term(schema, term);
  }
}

bool satisfies_term(const TableSchema& schema, const Term& term, const Tuple& t) {
  const Value& lhs = t.values.at(schema.column_index(term.lhs));
  const Value& rhs = term.rhs_is_column() ? t.values.at(schema.column_index(term.rhs_column()))
                                          : term.rhs_value();
  return op_holds(term.op, lhs.compare(rhs));
}

bool satisfies_clause(const TableSchema& schema, const Clause& clause, const Tuple& t) {
  for (const auto& term : clause)
    if (satisfies_term(schema, term, t)) return true;
  return false;
}

bool satisfies(const TableSchema& schema, const CnfPredicate& pred, const Tuple& t) {
  for (const auto& clause : pred)
    if (!satisfies_clause(schema, clause, t)) return false;
  return true;
}

Tuple project(const TableSchema& schema, const Query& q, const Tuple& t) {
  if (!q.projection) return t;
  Tuple out;
  out.values.reserve(q.projection->size());
  for (const auto& name : *q.projection) out.values.push_back(t.values.at(schema.column_index(name)));
  return out;
}

}  // namespace lakecov
