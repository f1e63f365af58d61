#include <algorithm>
#include <limits>
#include <unordered_map>

#include "mgrq/pareto.hpp"
#include "mgrq/search.hpp"
#include "search_detail.hpp"

namespace mgrq {

std::optional<Way> join_pair(const CostGainGraph& g, const Way& w_start, const Way& w_ret,
                             Mode mode, const RcConfig& rc, double tau) {
    if (w_start.end != w_ret.start || w_ret.end != w_start.start)
        throw std::invalid_argument("join_pair: endpoint mismatch");
    if (w_start.cost + w_ret.cost > tau) return std::nullopt;
    if (w_start.empty() && w_ret.empty()) return std::nullopt;
    if (mode == Mode::rc) {
        for (const auto& [u, count] : w_ret.multiplicity)
            if (w_start.multiplicity_of(u) + count > rc.k) return std::nullopt;
    }
    // concat re-deduplicates shared edges, so the rc gain is the union gain.
    return concat(g, w_start, w_ret);
}

QueryResult run_bidi(const CostGainGraph& g, const Query& q) {
    detail::validate_query(g, q);
    detail::Stopwatch clock;
    const bool rc = q.mode == Mode::rc;
    const bool pruning = !rc || q.rc.dominance_pruning;
    const double half = q.tau / 2.0;
    constexpr double kNoGain = -std::numeric_limits<double>::infinity();

    struct BidiEntry {
        ParetoSet start_set;  // ways s -> v
        ParetoSet ret_set;    // ways v -> s
        BidiEntry(Mode mode, bool subset, bool pruning)
            : start_set(mode, subset, pruning), ret_set(mode, subset, pruning) {}
    };
    std::unordered_map<NodeId, BidiEntry> tab;
    detail::GainQueue queue;
    SearchStats stats;

    auto combined_max = [&](const BidiEntry& entry) {
        double m = kNoGain;
        if (entry.start_set.has_unprocessed())
            m = std::max(m, entry.start_set.max_unprocessed_gain());
        if (entry.ret_set.has_unprocessed()) m = std::max(m, entry.ret_set.max_unprocessed_gain());
        return m;
    };
    auto admit = [&](NodeId v, Way&& w, bool to_start_set) {
        auto [it, created] = tab.try_emplace(v, q.mode, rc, pruning);
        if (created) ++stats.nodes_visited;
        BidiEntry& entry = it->second;
        double before = combined_max(entry);
        ParetoSet& set = to_start_set ? entry.start_set : entry.ret_set;
        UpdateOutcome outcome = set.update(std::move(w));
        if (outcome == UpdateOutcome::rejected_dominated) ++stats.ways_pruned;
        double after = combined_max(entry);
        if (outcome == UpdateOutcome::inserted && after > before) queue.push(v, after);
    };

    // Forward seeds from the outlinks; candidates past tau/2 stay as the
    // one-hop-over frontier but anything past tau can never close a trip.
    for (const Edge& e : g.out_edges(q.start)) {
        if (e.cost > q.tau) continue;
        Way w = Way::single(e);
        admit(w.end, std::move(w), true);
    }
    // The empty way seeds the return side; its expansion by the inlinks of s
    // produces the single-edge return ways.
    admit(q.start, Way::at(q.start), false);

    detail::Deadline deadline(q);
    while (auto top = queue.pop()) {
        deadline.poll(stats);
        auto [pri, v] = *top;
        auto it = tab.find(v);
        if (it == tab.end()) continue;
        BidiEntry& entry = it->second;
        if (combined_max(entry) != pri) continue;  // stale

        std::vector<Way> fwd = entry.start_set.take_unprocessed();
        std::vector<Way> bwd = entry.ret_set.take_unprocessed();

        for (const Way& w : fwd) {
            if (w.cost > half) continue;  // frontier way, stored but not extended
            for (const Edge& e : g.out_edges(w.end)) {
                ++stats.ways_expanded;
                if (w.cost + e.cost > q.tau) continue;
                if (rc && w.multiplicity_of(e.undirected_id) + 1 > q.rc.k) continue;
                Way cand = extend(w, e);
                admit(cand.end, std::move(cand), true);
            }
        }
        for (const Way& w : bwd) {
            for (const Edge& e : g.in_edges(w.start)) {
                ++stats.ways_expanded;
                if (w.cost + e.cost > half) continue;  // return ways stay within tau/2
                if (rc && w.multiplicity_of(e.undirected_id) + 1 > q.rc.k) continue;
                Way cand = prepend(w, e);
                admit(cand.start, std::move(cand), false);
            }
        }
    }

    // Join phase: pair every forward way with every return way at each node.
    ParetoSet result(q.mode, false, true);
    std::vector<NodeId> nodes;
    nodes.reserve(tab.size());
    for (const auto& [v, entry] : tab) nodes.push_back(v);
    std::sort(nodes.begin(), nodes.end());
    for (NodeId v : nodes) {
        deadline.poll(stats);
        const BidiEntry& entry = tab.at(v);
        for (const auto& ws : entry.start_set.items()) {
            for (const auto& wr : entry.ret_set.items()) {
                auto trip = join_pair(g, ws.way, wr.way, q.mode, q.rc, q.tau);
                if (trip) result.update(std::move(*trip));
            }
        }
    }

    QueryResult res;
    for (const auto& item : result.items())
        res.front.push_back({item.way.cost, item.gain, item.way});
    for (const auto& [v, entry] : tab)
        stats.ways_pruned += entry.start_set.evicted_count() + entry.ret_set.evicted_count();
    stats.wall_time_ms = clock.elapsed_ms();
    res.stats = stats;
    return res;
}

}  // namespace mgrq
