#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>

#include "lakecov/estimator.hpp"

namespace lakecov {

// Plan results form a semigroup under intersection; identity is the
// "everything" element used for the empty plan, with size(identity) = |F|.
template <class R>
struct Semigroup {
  std::function<R(const R&, const R&)> combine;
  std::function<double(const R&)> size;
  R identity;
};

// Record-count results: combine is floor(r1*r2/|T|), size the balls-in-bins
// file estimate.
Semigroup<NumericResult> numeric_semigroup(double table_rows, double file_count);

// Set results: intersection and cardinality; identity is the given universe.
template <class T>
Semigroup<std::set<T>> set_semigroup(std::set<T> universe) {
  Semigroup<std::set<T>> sg;
  sg.combine = [](const std::set<T>& a, const std::set<T>& b) {
    std::set<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
  };
  sg.size = [](const std::set<T>& s) { return double(s.size()); };
  sg.identity = std::move(universe);
  return sg;
}

struct PlanRef {
  std::size_t clause = 0;
  std::size_t plan = 0;

  auto operator<=>(const PlanRef&) const = default;
};

// chosen holds at most one plan per clause, sorted by (clause, plan) except
// in greedy traces where it records selection order.
struct CoveragePlan {
  std::vector<PlanRef> chosen;
  double total_cost = 0;
};

struct GreedyTrace {
  std::vector<PlanRef> order;
  std::vector<double> costs;  // running cost after each addition
};

enum class Decision { Execute, Fallback };

inline Decision decide(double plan_cost, double k) {
  if (!(k > 0)) throw ContractError("threshold must be positive");
  return plan_cost <= k ? Decision::Execute : Decision::Fallback;
}

// Sum of chosen plan costs plus size of the fold of their results. The fold
// runs in ascending (clause, plan) order: the numeric combine floors, so the
// order is pinned for determinism. Empty selection costs size(identity).
template <class R>
double plan_cost(std::vector<PlanRef> chosen, const BqcppInputT<R>& in, const Semigroup<R>& sg) {
  std::sort(chosen.begin(), chosen.end());
  if (chosen.empty()) return sg.size(sg.identity);
  double cost = 0;
  bool seeded = false;
  R folded{};
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const auto& ref = chosen[i];
    if (i > 0 && ref.clause == chosen[i - 1].clause)
      throw ContractError("more than one plan for a clause");
    const auto& plan = in.clauses.at(ref.clause).at(ref.plan);
    cost += plan.cost;
    if (!seeded) {
      folded = plan.result;
      seeded = true;
    } else {
      folded = sg.combine(folded, plan.result);
    }
  }
  return cost + sg.size(folded);
}

namespace detail {

inline bool better_plan(double cost, const std::vector<PlanRef>& chosen, double best_cost,
                        const std::vector<PlanRef>& best_chosen, bool have_best) {
  if (!have_best) return true;
  if (cost != best_cost) return cost < best_cost;
  if (chosen.size() != best_chosen.size()) return chosen.size() < best_chosen.size();
  return chosen < best_chosen;
}

}  // namespace detail

// Exhaustive search over every valid selection (at most one plan per clause).
// Minimum cost wins; ties prefer fewer plans, then lexicographic (clause,
// plan) order. Throws ContractError when the combination count exceeds
// max_combinations.
template <class R>
CoveragePlan solve_optimistic(const BqcppInputT<R>& in, const Semigroup<R>& sg,
                              std::uint64_t max_combinations = std::uint64_t{1} << 20) {
  std::uint64_t combos = 1;
  for (const auto& plans : in.clauses) {
    if (plans.empty()) throw ContractError("clause with no plans");
    if (combos > max_combinations / (plans.size() + 1))
      throw ContractError("combination bound exceeded; use the greedy solver");
    combos *= plans.size() + 1;
  }
  std::size_t n = in.clauses.size();
  // Odometer over per-clause choices; SIZE_MAX means "no plan for this clause".
  std::vector<std::size_t> choice(n, SIZE_MAX);
  std::vector<PlanRef> best;
  double best_cost = 0;
  bool have_best = false;
  while (true) {
    std::vector<PlanRef> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (choice[i] != SIZE_MAX) chosen.push_back({i, choice[i]});
    double cost = plan_cost(chosen, in, sg);
    if (detail::better_plan(cost, chosen, best_cost, best, have_best)) {
      best = chosen;
      best_cost = cost;
      have_best = true;
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (choice[i] == SIZE_MAX) {
        choice[i] = 0;
        if (!in.clauses[i].empty()) break;  // advanced to plan 0
        choice[i] = SIZE_MAX;
      } else if (choice[i] + 1 < in.clauses[i].size()) {
        ++choice[i];
        break;
      } else {
        choice[i] = SIZE_MAX;  // carry
      }
    }
    if (i == n) break;
  }
  return {std::move(best), best_cost};
}

// Repeatedly adds the single plan whose addition yields the lowest cost
// (first in (clause, plan) order on ties); stops when no addition improves
// the current cost or every clause holds a plan. The empty start costs
// size(identity).
template <class R>
CoveragePlan solve_greedy(const BqcppInputT<R>& in, const Semigroup<R>& sg,
                          GreedyTrace* trace = nullptr) {
  std::vector<PlanRef> current;
  double current_cost = plan_cost(current, in, sg);
  std::vector<bool> used(in.clauses.size(), false);
  while (current.size() < in.clauses.size()) {
    bool have_cand = false;
    PlanRef cand{};
    double cand_cost = 0;
    for (std::size_t i = 0; i < in.clauses.size(); ++i) {
      if (used[i]) continue;
      for (std::size_t j = 0; j < in.clauses[i].size(); ++j) {
        auto extended = current;
        extended.push_back({i, j});
        double cost = plan_cost(extended, in, sg);
        if (!have_cand || cost < cand_cost) {
          have_cand = true;
          cand = {i, j};
          cand_cost = cost;
        }
      }
    }
    if (!have_cand || cand_cost >= current_cost) break;
    current.push_back(cand);
    used[cand.clause] = true;
    current_cost = cand_cost;
    if (trace) {
      trace->order.push_back(cand);
      trace->costs.push_back(cand_cost);
    }
  }
  std::sort(current.begin(), current.end());
  return {std::move(current), current_cost};
}

using SetResult = std::set<int>;
using ScpBqcppInput = BqcppInputT<SetResult>;

// One clause per input set, single zero-cost plan whose result is the set's
// complement; minimizing intersection size then forces a cover.
ScpBqcppInput reduce_scp_to_bqcpp(const std::set<int>& universe,
                                  const std::vector<std::set<int>>& sets);

std::vector<std::set<int>> extract_scp_solution(const CoveragePlan& plan,
                                                const std::vector<std::set<int>>& sets);

}  // namespace lakecov
