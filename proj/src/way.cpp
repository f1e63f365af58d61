#include "mgrq/way.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgrq {

std::string_view to_string(Mode mode) {
    return mode == Mode::plain ? "plain" : "rc";
}

namespace {

// true when the id was absent before
bool insert_sorted(std::vector<EdgeId>& set, EdgeId id) {
    auto it = std::lower_bound(set.begin(), set.end(), id);
    if (it != set.end() && *it == id) return false;
    set.insert(it, id);
    return true;
}

void bump_multiplicity(std::vector<std::pair<std::uint32_t, std::uint32_t>>& mult,
                       std::uint32_t undirected_id) {
    auto it = std::lower_bound(mult.begin(), mult.end(), undirected_id,
                               [](const auto& p, std::uint32_t u) { return p.first < u; });
    if (it != mult.end() && it->first == undirected_id)
        ++it->second;
    else
        mult.insert(it, {undirected_id, 1});
}

void absorb(Way& w, const Edge& e) {
    w.edges.push_back(e.id);
    w.cost += e.cost;
    w.gain_plain += e.gain;
    if (insert_sorted(w.edge_set, e.id)) w.gain_rc += e.gain;
    bump_multiplicity(w.multiplicity, e.undirected_id);
}

}  // namespace

Way Way::at(NodeId node) {
    Way w;
    w.start = node;
    w.end = node;
    return w;
}

Way Way::single(const Edge& e) {
    Way w = Way::at(e.src);
    absorb(w, e);
    w.end = e.dst;
    return w;
}

bool Way::contains_edge(EdgeId id) const {
    return std::binary_search(edge_set.begin(), edge_set.end(), id);
}

std::uint32_t Way::multiplicity_of(std::uint32_t undirected_id) const {
    auto it = std::lower_bound(multiplicity.begin(), multiplicity.end(), undirected_id,
                               [](const auto& p, std::uint32_t u) { return p.first < u; });
    return (it != multiplicity.end() && it->first == undirected_id) ? it->second : 0;
}

std::uint32_t Way::max_multiplicity() const {
    std::uint32_t m = 0;
    for (const auto& [u, count] : multiplicity) m = std::max(m, count);
    return m;
}

std::vector<NodeId> Way::node_sequence(const CostGainGraph& g) const {
    std::vector<NodeId> seq;
    seq.reserve(edges.size() + 1);
    seq.push_back(start);
    for (EdgeId id : edges) seq.push_back(g.edge(id).dst);
    return seq;
}

Way extend(const Way& way, const Edge& e) {
    if (e.src != way.end) throw std::invalid_argument("extend: edge is not incident to way end");
    Way w = way;
    absorb(w, e);
    w.end = e.dst;
    return w;
}

Way prepend(const Way& way, const Edge& e) {
    if (e.dst != way.start)
        throw std::invalid_argument("prepend: edge is not incident to way start");
    Way w;
    w.start = e.src;
    w.end = way.empty() ? e.dst : way.end;
    w.edges.reserve(way.edges.size() + 1);
    w.edges.push_back(e.id);
    w.edges.insert(w.edges.end(), way.edges.begin(), way.edges.end());
    w.cost = way.cost + e.cost;
    w.gain_plain = way.gain_plain + e.gain;
    w.gain_rc = way.gain_rc;
    w.edge_set = way.edge_set;
    if (insert_sorted(w.edge_set, e.id)) w.gain_rc += e.gain;
    w.multiplicity = way.multiplicity;
    bump_multiplicity(w.multiplicity, e.undirected_id);
    return w;
}

Way concat(const CostGainGraph& g, const Way& a, const Way& b) {
    if (a.end != b.start) throw std::invalid_argument("concat: ways are not incident");
    Way w = a;
    for (EdgeId id : b.edges) absorb(w, g.edge(id));
    w.end = b.empty() ? a.end : b.end;
    return w;
}

bool respects_rc(const Way& way, std::uint32_t k) {
    for (const auto& [u, count] : way.multiplicity)
        if (count > k) return false;
    return true;
}

std::pair<double, double> label_of(const Way& way, Mode mode) {
    return {way.cost, mode == Mode::plain ? way.gain_plain : way.gain_rc};
}

}  // namespace mgrq
