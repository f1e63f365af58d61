#include <limits>
#include <unordered_map>

#include "mgrq/pareto.hpp"
#include "mgrq/search.hpp"
#include "search_detail.hpp"

namespace mgrq {

QueryResult run_uni(const CostGainGraph& g, const Query& q) {
    detail::validate_query(g, q);
    detail::Stopwatch clock;
    const bool rc = q.mode == Mode::rc;
    const bool pruning = !rc || q.rc.dominance_pruning;
    constexpr double kNoGain = -std::numeric_limits<double>::infinity();

    std::unordered_map<NodeId, ParetoSet> tab;
    detail::GainQueue queue;
    SearchStats stats;

    auto admit = [&](Way&& w) {
        NodeId v = w.end;
        auto [it, created] = tab.try_emplace(v, q.mode, rc, pruning);
        if (created) ++stats.nodes_visited;
        ParetoSet& entry = it->second;
        double before = entry.has_unprocessed() ? entry.max_unprocessed_gain() : kNoGain;
        UpdateOutcome outcome = entry.update(std::move(w));
        if (outcome == UpdateOutcome::rejected_dominated) ++stats.ways_pruned;
        if (outcome == UpdateOutcome::inserted && entry.max_unprocessed_gain() > before)
            queue.push(v, entry.max_unprocessed_gain());
    };

    for (const Edge& e : g.out_edges(q.start)) {
        if (e.cost > q.tau) continue;
        admit(Way::single(e));  // a single edge respects any k >= 1
    }

    detail::Deadline deadline(q);
    while (auto top = queue.pop()) {
        deadline.poll(stats);
        auto [pri, v] = *top;
        auto it = tab.find(v);
        if (it == tab.end()) continue;
        ParetoSet& entry = it->second;
        if (!entry.has_unprocessed() || entry.max_unprocessed_gain() != pri) continue;  // stale

        // Copy before extending: extensions may update this very entry.
        std::vector<Way> ways = entry.take_unprocessed();
        for (const Way& w : ways) {
            for (const Edge& e : g.out_edges(w.end)) {
                ++stats.ways_expanded;
                if (w.cost + e.cost > q.tau) continue;
                if (rc && w.multiplicity_of(e.undirected_id) + 1 > q.rc.k) continue;
                admit(extend(w, e));
            }
        }
    }

    QueryResult res;
    if (auto it = tab.find(q.start); it != tab.end()) {
        if (!rc) {
            // The node tab entry of the start node is the front already.
            for (const auto& item : it->second.items())
                res.front.push_back({item.way.cost, item.gain, item.way});
        } else {
            // Under redundancy control the entry may hold dominated trips;
            // reduce into a dedicated result skyline.
            ParetoSet skyline(Mode::rc, false, true);
            for (const auto& item : it->second.items()) skyline.update(item.way);
            for (const auto& item : skyline.items())
                res.front.push_back({item.way.cost, item.gain, item.way});
        }
    }

    for (const auto& [v, entry] : tab) stats.ways_pruned += entry.evicted_count();
    stats.wall_time_ms = clock.elapsed_ms();
    res.stats = stats;
    return res;
}

}  // namespace mgrq
