#include "lakecov/report.hpp"

#include "json.hpp"

namespace lakecov {

namespace {

nlohmann::json plan_json(const CoveragePlan& plan) {
  nlohmann::json chosen = nlohmann::json::array();
  for (const auto& ref : plan.chosen) chosen.push_back({{"clause", ref.clause}, {"plan", ref.plan}});
  return {{"total_cost", plan.total_cost}, {"chosen", chosen}};
}

}  // namespace

std::string mismatch_report_json(const BqcppInput& input, const CoveragePlan& greedy,
                                 const CoveragePlan& optimistic, std::uint64_t seed) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& plans : input.clauses) {
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& p : plans)
      cj.push_back({{"cost", p.cost},
                    {"records", p.result.all ? nlohmann::json() : nlohmann::json(p.result.records)},
                    {"everything", p.result.all}});
    clauses.push_back(cj);
  }
  nlohmann::json j{{"seed", seed},
                   {"table_rows", input.table_rows},
                   {"file_count", input.file_count},
                   {"clauses", clauses},
                   {"greedy", plan_json(greedy)},
                   {"optimistic", plan_json(optimistic)},
                   {"cost_gap", greedy.total_cost - optimistic.total_cost}};
  return j.dump(2) + "\n";
}

}  // namespace lakecov
