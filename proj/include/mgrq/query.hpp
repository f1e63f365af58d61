#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mgrq/way.hpp"

namespace mgrq {

struct RcConfig {
    std::uint32_t k = 1;  // max traversals per undirected segment
    bool dominance_pruning = true;
};

struct SearchStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t ways_expanded = 0;
    std::uint64_t ways_pruned = 0;
    double wall_time_ms = 0.0;
};

struct Query {
    NodeId start = 0;
    double tau = 0.0;
    Mode mode = Mode::plain;
    RcConfig rc;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct FrontEntry {
    double cost = 0.0;
    double gain = 0.0;
    Way way;
};

/// Pareto front of round trips, cost-ascending with strictly ascending gain.
struct QueryResult {
    std::vector<FrontEntry> front;
    SearchStats stats;
};

class search_timeout : public std::runtime_error {
public:
    explicit search_timeout(SearchStats stats)
        : std::runtime_error("search exceeded its deadline"), stats(stats) {}
    SearchStats stats;
};

}  // namespace mgrq
