#include "mgrq/oracle.hpp"

#include <map>
#include <unordered_set>

#include "search_detail.hpp"

namespace mgrq {

QueryResult oracle_front(const CostGainGraph& g, const Query& q, std::uint64_t max_expansions) {
    detail::validate_query(g, q);
    detail::Stopwatch clock;
    const bool rc = q.mode == Mode::rc;

    // Depth-first enumeration of the whole way tree below tau. No dominance
    // pruning anywhere, so a pruning bug cannot leak into the reference.
    std::vector<Way> stack;
    std::unordered_set<NodeId> touched;
    std::uint64_t expansions = 0;
    SearchStats stats;
    detail::Deadline deadline(q);

    // Best trip per cost level, first-found wins on gain ties. Keeping the
    // reduction inline bounds memory by the number of distinct cost levels.
    std::map<double, std::pair<double, Way>> best_by_cost;
    auto record_trip = [&](const Way& w) {
        double gain = rc ? w.gain_rc : w.gain_plain;
        auto [it, fresh] = best_by_cost.try_emplace(w.cost, gain, w);
        if (!fresh && gain > it->second.first) it->second = {gain, w};
    };

    auto push_extension = [&](const Way& w, const Edge& e) {
        if (w.cost + e.cost > q.tau) return;
        if (rc && w.multiplicity_of(e.undirected_id) + 1 > q.rc.k) return;
        if (++expansions > max_expansions) throw oracle_budget_exceeded(max_expansions);
        stack.push_back(extend(w, e));
    };

    for (const Edge& e : g.out_edges(q.start)) push_extension(Way::at(q.start), e);

    while (!stack.empty()) {
        stats.nodes_visited = touched.size();
        stats.ways_expanded = expansions;
        deadline.poll(stats);
        Way w = std::move(stack.back());
        stack.pop_back();
        touched.insert(w.end);
        if (w.is_round_trip()) record_trip(w);
        for (const Edge& e : g.out_edges(w.end)) push_extension(w, e);
    }

    // Cost-ascending sweep keeping strictly improving gain.
    QueryResult res;
    double best_gain = -1.0;  // gains are non-negative
    for (auto& [cost, entry] : best_by_cost) {
        if (entry.first > best_gain) {
            best_gain = entry.first;
            res.front.push_back({cost, entry.first, std::move(entry.second)});
        }
    }

    stats.nodes_visited = touched.size();
    stats.ways_expanded = expansions;
    stats.wall_time_ms = clock.elapsed_ms();
    res.stats = stats;
    return res;
}

}  // namespace mgrq
