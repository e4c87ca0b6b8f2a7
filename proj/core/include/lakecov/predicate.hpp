#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lakecov/schema.hpp"

namespace lakecov {

enum class Op { Eq, Ne, Ge, Le, Gt, Lt };

std::string to_string(Op op);
Op op_from_string(const std::string& s);

// Applies op to an already-computed three-way comparison result.
bool op_holds(Op op, int cmp);

// <column op value> or <column op column>.
struct Term {
  std::string lhs;
  Op op;
  std::variant<Value, std::string> rhs;

  bool rhs_is_column() const { return rhs.index() == 1; }
  const Value& rhs_value() const { return std::get<Value>(rhs); }
  const std::string& rhs_column() const { return std::get<std::string>(rhs); }

  static Term cmp(std::string col, Op op, Value v) { return Term{std::move(col), op, std::move(v)}; }
  static Term col_cmp(std::string col1, Op op, std::string col2) {
    return Term{std::move(col1), op, std::move(col2)};
  }
};

// Disjunction of terms; never empty.
using Clause = std::vector<Term>;

// Conjunction of clauses; empty list is the tautology.
using CnfPredicate = std::vector<Clause>;

struct Query {
  CnfPredicate predicate;
  std::optional<std::vector<std::string>> projection;  // nullopt = all columns
};

// Throws TypeError if a term references a missing column, compares mismatched
// kinds, or a clause is empty.
void check_predicate(const TableSchema& schema, const CnfPredicate& pred);

bool satisfies_term(const TableSchema& schema, const Term& term, const Tuple& t);
bool satisfies_clause(const TableSchema& schema, const Clause& clause, const Tuple& t);
bool satisfies(const TableSchema& schema, const CnfPredicate& pred, const Tuple& t);

// Projects t onto q.projection (identity when absent).
Tuple project(const TableSchema& schema, const Query& q, const Tuple& t);

}  // namespace lakecov
