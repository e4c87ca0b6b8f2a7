#include "doctest.h"
#include "fixtures.hpp"
#include "lakecov/predicate.hpp"
#include "lakecov/tsv.hpp"

using namespace lakecov;
using namespace fixtures;

TEST_CASE("schema rejects bad column lists") {
  CHECK_THROWS_AS(TableSchema({{"a", ValueKind::Int}, {"a", ValueKind::Text}}), TypeError);
  CHECK_THROWS_AS(TableSchema({{"", ValueKind::Int}}), TypeError);
  TableSchema s({{"a", ValueKind::Int}, {"b", ValueKind::Text}});
  CHECK(s.column_index("b") == 1);
  CHECK(s.column_kind("a") == ValueKind::Int);
  CHECK_THROWS_AS((void)s.column_index("c"), NotFoundError);
}

TEST_CASE("check_tuple enforces width and kinds") {
  auto schema = metrics_schema();
  CHECK_NOTHROW(check_tuple(schema, row("2020-01-01", "cpu", 1)));
  CHECK_THROWS_AS(check_tuple(schema, Tuple{{Value::of_int(1)}}), TypeError);
  CHECK_THROWS_AS(
      check_tuple(schema, Tuple{{Value::of_int(1), Value::of_text("x"), Value::of_int(2)}}),
      TypeError);
}

TEST_CASE("op_holds maps comparisons") {
  CHECK(op_holds(Op::Eq, 0));
  CHECK_FALSE(op_holds(Op::Eq, 1));
  CHECK(op_holds(Op::Ne, -1));
  CHECK(op_holds(Op::Ge, 0));
  CHECK(op_holds(Op::Gt, 1));
  CHECK_FALSE(op_holds(Op::Gt, 0));
  CHECK(op_holds(Op::Le, -1));
  CHECK_FALSE(op_holds(Op::Lt, 0));
}

TEST_CASE("op names round-trip") {
  for (auto op : {Op::Eq, Op::Ne, Op::Ge, Op::Le, Op::Gt, Op::Lt})
    CHECK(op_from_string(to_string(op)) == op);
  CHECK(op_from_string("==") == Op::Eq);  // alias
  CHECK(op_from_string("<>") == Op::Ne);
  CHECK_THROWS_AS(op_from_string("~"), ParseError);
}

TEST_CASE("satisfies evaluates cnf over the metrics rows") {
  auto schema = metrics_schema();
  // metric = 'memory' and val > 10
  CnfPredicate p{{Term::cmp("metric", Op::Eq, Value::of_text("memory"))},
                 {Term::cmp("val", Op::Gt, Value::of_int(10))}};
  CHECK(satisfies(schema, p, row("2020-02-18", "memory", 11)));
  CHECK_FALSE(satisfies(schema, p, row("2020-02-16", "memory", 8)));
  CHECK_FALSE(satisfies(schema, p, row("2020-02-20", "cpu", 88)));

  // Disjunction within a clause.
  CnfPredicate q{{eq_date("date", "2020-02-20"), eq_date("date", "2020-03-13")}};
  CHECK(satisfies(schema, q, row("2020-02-20", "cpu", 88)));
  CHECK(satisfies(schema, q, row("2020-03-13", "memory", 6)));
  CHECK_FALSE(satisfies(schema, q, row("2020-02-21", "cpu", 66)));

  // Empty predicate is the tautology.
  CHECK(satisfies(schema, {}, row("2020-02-10", "cpu", 47)));
}

TEST_CASE("column-to-column terms compare within a row") {
  TableSchema s({{"a", ValueKind::Int}, {"b", ValueKind::Int}});
  Tuple t{{Value::of_int(3), Value::of_int(7)}};
  CHECK(satisfies_term(s, Term::col_cmp("a", Op::Lt, "b"), t));
  CHECK_FALSE(satisfies_term(s, Term::col_cmp("a", Op::Ge, "b"), t));
  CHECK(satisfies_term(s, Term::col_cmp("a", Op::Eq, "a"), t));
}

TEST_CASE("check_predicate rejects bad shapes") {
  auto schema = metrics_schema();
  CHECK_THROWS_AS(check_predicate(schema, {{Term::cmp("nope", Op::Eq, Value::of_int(1))}}),
                  NotFoundError);
  CHECK_THROWS_AS(check_predicate(schema, {{Term::cmp("val", Op::Eq, Value::of_text("x"))}}),
                  TypeError);
  CHECK_THROWS_AS(check_predicate(schema, {Clause{}}), TypeError);
  CHECK_THROWS_AS(check_predicate(schema, {{Term::col_cmp("val", Op::Lt, "date")}}), TypeError);
  CHECK_NOTHROW(check_predicate(schema, {{Term::cmp("val", Op::Ne, Value::of_int(5))}}));
}

TEST_CASE("project keeps the asked columns in query order") {
  auto schema = metrics_schema();
  Query q;
  q.projection = {{"val", "metric"}};
  Tuple t = row("2020-02-10", "cpu", 47);
  Tuple out = project(schema, q, t);
  REQUIRE(out.values.size() == 2);
  CHECK(out.values[0] == Value::of_int(47));
  CHECK(out.values[1] == Value::of_text("cpu"));

  Query all;
  CHECK(project(schema, all, t) == t);

  Query bad;
  bad.projection = {{"nope"}};
  CHECK_THROWS_AS((void)project(schema, bad, t), NotFoundError);
}

TEST_CASE("tsv codec round-trips a lake file") {
  auto schema = metrics_schema();
  std::vector<Tuple> rows{row("2020-02-10", "cpu", 47), row("2020-02-18", "memory", 11)};
  std::string bytes = encode_lake_file(schema, rows);
  CHECK(lake_file_columns(bytes) == std::vector<std::string>{"date", "metric", "val"});
  CHECK(decode_lake_file(schema, bytes) == rows);

  CHECK_THROWS_AS(decode_lake_file(schema, "date\tmetric\n"), ParseError);
  CHECK_THROWS_AS(decode_lake_file(schema, "date\tmetric\tval\n1\t2\n"), ParseError);
}

TEST_CASE("schema inference picks the narrowest kind per column") {
  std::string bytes = "a\tb\tc\td\n1\t1.5\t2020-01-01\thello\n-3\t2\t2020-12-31\t7seas\n";
  TableSchema s = infer_schema(bytes);
  REQUIRE(s.width() == 4);
  CHECK(s.column(0).kind == ValueKind::Int);
  CHECK(s.column(1).kind == ValueKind::Float);
  CHECK(s.column(2).kind == ValueKind::Date);
  CHECK(s.column(3).kind == ValueKind::Text);
}

TEST_CASE("tsv line splitting keeps empty fields and 1-based numbering") {
  auto f = split_tsv_line("a\t\tb");
  REQUIRE(f.size() == 3);
  CHECK(f[1].empty());

  std::vector<std::size_t> lines;
  for_each_tsv_row("x\n\ny\n", [&](std::size_t n, const auto&) { lines.push_back(n); });
  CHECK(lines == std::vector<std::size_t>{1, 3});
}
