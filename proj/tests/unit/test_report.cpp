#include <cmath>

#include "doctest.h"
#include "json.hpp"
#include "lakecov/planner.hpp"
#include "lakecov/report.hpp"

using namespace lakecov;

TEST_CASE("solver disagreements serialize to a replayable document") {
  // Two cheap selective clauses whose pairwise intersection collapses; the
  // greedy solver refuses both because each alone looks worse than the
  // identity, while the exhaustive solver takes the pair.
  BqcppInput in;
  in.table_rows = 1e6;
  in.file_count = 100;
  in.clauses = {{{1.0, NumericResult::of(3000)}}, {{1.0, NumericResult::of(3000)}}};
  auto sg = numeric_semigroup(in.table_rows, in.file_count);

  auto greedy = solve_greedy(in, sg);
  auto optimistic = solve_optimistic(in, sg);
  REQUIRE(greedy.chosen.empty());
  CHECK(greedy.total_cost == doctest::Approx(100.0));
  REQUIRE(optimistic.chosen.size() == 2);
  double pair_cost = 2.0 + 100.0 * (1.0 - std::pow(0.99, 9.0));
  CHECK(optimistic.total_cost == doctest::Approx(pair_cost));
  REQUIRE(optimistic.total_cost < greedy.total_cost);

  std::string doc = mismatch_report_json(in, greedy, optimistic, 12345);
  CHECK(doc.back() == '\n');
  auto j = nlohmann::json::parse(doc);

  CHECK(j.at("seed").get<std::uint64_t>() == 12345);
  CHECK(j.at("table_rows").get<double>() == doctest::Approx(1e6));
  CHECK(j.at("file_count").get<double>() == doctest::Approx(100.0));
  CHECK(j.at("cost_gap").get<double>() ==
        doctest::Approx(greedy.total_cost - optimistic.total_cost));

  REQUIRE(j.at("clauses").size() == 2);
  REQUIRE(j.at("clauses")[0].size() == 1);
  CHECK(j.at("clauses")[0][0].at("cost").get<double>() == doctest::Approx(1.0));
  CHECK(j.at("clauses")[0][0].at("records").get<double>() == doctest::Approx(3000.0));
  CHECK_FALSE(j.at("clauses")[0][0].at("everything").get<bool>());

  CHECK(j.at("greedy").at("chosen").empty());
  CHECK(j.at("greedy").at("total_cost").get<double>() == doctest::Approx(100.0));
  REQUIRE(j.at("optimistic").at("chosen").size() == 2);
  CHECK(j.at("optimistic").at("chosen")[0].at("clause").get<std::size_t>() == 0);
  CHECK(j.at("optimistic").at("chosen")[0].at("plan").get<std::size_t>() == 0);
  CHECK(j.at("optimistic").at("chosen")[1].at("clause").get<std::size_t>() == 1);
}

TEST_CASE("the everything sentinel serializes as a null record count") {
  BqcppInput in;
  in.table_rows = 100;
  in.file_count = 10;
  in.clauses = {{{kInfiniteCost, NumericResult::everything()},
                 {2.0, NumericResult::of(5)}}};
  auto sg = numeric_semigroup(in.table_rows, in.file_count);
  auto greedy = solve_greedy(in, sg);
  auto optimistic = solve_optimistic(in, sg);

  auto j = nlohmann::json::parse(mismatch_report_json(in, greedy, optimistic, 7));
  CHECK(j.at("clauses")[0][0].at("records").is_null());
  CHECK(j.at("clauses")[0][0].at("everything").get<bool>());
  CHECK(j.at("clauses")[0][1].at("records").get<double>() == doctest::Approx(5.0));
  // No disagreement here; the document still round-trips.
  CHECK(j.at("cost_gap").get<double>() == doctest::Approx(0.0));
}
