#pragma once

#include <cstdint>
#include <stdexcept>

#include "mgrq/query.hpp"

namespace mgrq {

class oracle_budget_exceeded : public std::runtime_error {
public:
    explicit oracle_budget_exceeded(std::uint64_t budget)
        : std::runtime_error("oracle expansion budget exceeded; instance too large"),
          budget(budget) {}
    std::uint64_t budget;
};

/// Exhaustive reference enumerator: depth-first over every way from s with
/// cost <= tau (rc mode additionally multiplicity <= k), reduced to the
/// Pareto front with no dominance pruning during enumeration. Exact but only
/// feasible on desk-size instances; throws oracle_budget_exceeded when the
/// way tree outgrows max_expansions.
QueryResult oracle_front(const CostGainGraph& g, const Query& q,
                         std::uint64_t max_expansions = 10'000'000);

}  // namespace mgrq
