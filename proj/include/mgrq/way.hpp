#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mgrq/graph.hpp"

namespace mgrq {

enum class Mode { plain, rc };

std::string_view to_string(Mode mode);

/// Sequence of incident directed edges with cached aggregates. Ways are
/// immutable values; extend/prepend/concat produce new ways. gain_plain sums
/// every traversal, gain_rc sums each distinct directed edge once.
/// multiplicity counts traversals per undirected segment (both directions
/// together).
struct Way {
    std::vector<EdgeId> edges;  // traversal order
    NodeId start = 0;
    NodeId end = 0;
    double cost = 0.0;
    double gain_plain = 0.0;
    double gain_rc = 0.0;
    std::vector<EdgeId> edge_set;  // sorted, distinct directed ids
    std::vector<std::pair<std::uint32_t, std::uint32_t>> multiplicity;  // sorted by undirected id

    /// Empty way anchored at a node; the search seed, never a result.
    static Way at(NodeId node);
    static Way single(const Edge& e);

    bool empty() const { return edges.empty(); }
    bool is_round_trip() const { return !edges.empty() && start == end; }
    std::size_t length() const { return edges.size(); }

    bool contains_edge(EdgeId id) const;
    std::uint32_t multiplicity_of(std::uint32_t undirected_id) const;
    std::uint32_t max_multiplicity() const;

    /// Node sequence start, ..., end (length + 1 entries; just start when empty).
    std::vector<NodeId> node_sequence(const CostGainGraph& g) const;
};

/// way + edge, edge.src must equal way.end.
Way extend(const Way& way, const Edge& e);

/// edge + way, edge.dst must equal way.start. Return ways grow this way.
Way prepend(const Way& way, const Edge& e);

/// a followed by b, a.end must equal b.start.
Way concat(const CostGainGraph& g, const Way& a, const Way& b);

/// true iff no undirected segment is traversed more than k times.
bool respects_rc(const Way& way, std::uint32_t k);

/// (cost, gain_plain) in plain mode, (cost, gain_rc) in rc mode.
std::pair<double, double> label_of(const Way& way, Mode mode);

}  // namespace mgrq
