#pragma once

#include <cstdint>
#include <string>

#include "lakecov/planner.hpp"

namespace lakecov {

// JSON document recording a solver disagreement on one instance: the full
// instance, both plans, and the cost gap. Written whenever the greedy and
// exhaustive solvers differ so the case can be replayed.
std::string mismatch_report_json(const BqcppInput& input, const CoveragePlan& greedy,
                                 const CoveragePlan& optimistic, std::uint64_t seed);

}  // namespace lakecov
