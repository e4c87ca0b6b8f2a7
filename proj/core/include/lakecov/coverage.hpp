#pragma once

#include <set>
#include <string>

#include "lakecov/lake.hpp"
#include "lakecov/predicate.hpp"

namespace lakecov {

using CoverageSet = std::set<std::string>;

// Exactly the files holding at least one satisfying tuple. Performs exactly
// |F| store reads; stops scanning a file at its first match.
CoverageSet naive_tight_coverage(const Query& q, const Lake& lake, ObjectStore& store);

// True iff no file outside x contains a satisfying tuple. Test oracle: reads
// every file. Throws ContractError when x contains unknown keys.
bool is_coverage(const CoverageSet& x, const Query& q, const Lake& lake, ObjectStore& store);

// 1 - (|x|-|TC|)/(|F|-|TC|) when |TC| < |F|, else 0. Throws ContractError
// when x is not a coverage set of q.
double tightness_degree(const CoverageSet& x, const Query& q, const Lake& lake,
                        ObjectStore& store);

// |TC(q)| / |F|.
double coverage_degree(const Query& q, const Lake& lake, ObjectStore& store);

}  // namespace lakecov
