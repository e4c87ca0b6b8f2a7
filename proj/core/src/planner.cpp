#include "lakecov/planner.hpp"

#include <cmath>

namespace lakecov {

Semigroup<NumericResult> numeric_semigroup(double table_rows, double file_count) {
  if (!(table_rows >= 1)) throw ContractError("table_rows must be at least 1");
  if (!(file_count >= 1)) throw ContractError("file_count must be at least 1");
  Semigroup<NumericResult> sg;
  sg.combine = [table_rows](const NumericResult& a, const NumericResult& b) {
    if (a.all) return b;
    if (b.all) return a;
    return NumericResult::of(std::floor(a.records * b.records / table_rows));
  };
  sg.size = [file_count](const NumericResult& r) {
    if (r.all) return file_count;
    return records_to_files(r.records, file_count);
  };
  sg.identity = NumericResult::everything();
  return sg;
}

ScpBqcppInput reduce_scp_to_bqcpp(const std::set<int>& universe,
                                  const std::vector<std::set<int>>& sets) {
  if (sets.empty()) throw ContractError("need at least one set");
  std::set<int> covered;
  for (const auto& s : sets) {
    for (int e : s) {
      if (!universe.count(e)) throw ContractError("set element outside the universe");
      covered.insert(e);
    }
  }
  if (covered != universe) throw ContractError("sets do not cover the universe");
  ScpBqcppInput in;
  in.table_rows = double(universe.size());
  in.file_count = double(universe.size());
  for (const auto& s : sets) {
    std::set<int> complement;
    std::set_difference(universe.begin(), universe.end(), s.begin(), s.end(),
                        std::inserter(complement, complement.end()));
    in.clauses.push_back({PlanEstimateT<SetResult>{0.0, std::move(complement)}});
  }
  return in;
}

std::vector<std::set<int>> extract_scp_solution(const CoveragePlan& plan,
                                                const std::vector<std::set<int>>& sets) {
  std::vector<std::set<int>> picked;
  for (const auto& ref : plan.chosen) picked.push_back(sets.at(ref.clause));
  return picked;
}

}  // namespace lakecov
