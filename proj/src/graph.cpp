#include "mgrq/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "mgrq/json_io.hpp"

namespace mgrq {

namespace {

constexpr double kEarthRadiusM = 6371000.0;
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

}  // namespace

std::string_view to_string(CoordMode mode) {
    switch (mode) {
        case CoordMode::geo: return "geo";
        case CoordMode::plane: return "plane";
        case CoordMode::none: return "none";
    }
    return "none";
}

std::optional<CoordMode> coord_mode_from_string(std::string_view s) {
    if (s == "geo") return CoordMode::geo;
    if (s == "plane") return CoordMode::plane;
    if (s == "none") return CoordMode::none;
    return std::nullopt;
}

double haversine_m(double lat1, double lon1, double lat2, double lon2) {
    double dlat = (lat2 - lat1) * kDegToRad;
    double dlon = (lon2 - lon1) * kDegToRad;
    double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
               std::cos(lat1 * kDegToRad) * std::cos(lat2 * kDegToRad) *
                   std::sin(dlon / 2) * std::sin(dlon / 2);
    return kEarthRadiusM * 2.0 * std::atan2(std::sqrt(a), std::sqrt(1.0 - a));
}

NodeId GraphData::add_node(std::string name, std::optional<Coords> xy) {
    names.push_back(std::move(name));
    coords.push_back(xy);
    return static_cast<NodeId>(names.size() - 1);
}

// ---------------------------------------------------------------------------
// construction

CostGainGraph::CostGainGraph(GraphData data)
    : names_(std::move(data.names)),
      coords_(std::move(data.coords)),
      mode_(data.mode),
      contracted_(data.contracted) {
    const std::size_t n = names_.size();
    name_index_.reserve(n);
    for (NodeId v = 0; v < n; ++v) name_index_.emplace(names_[v], v);

    edges_.reserve(data.edges.size());
    maxspeed_.reserve(data.edges.size());

    // Pair the two directions of a segment: a directed edge attaches to the
    // first record for its endpoint pair that lacks that direction; parallel
    // segments get distinct ids by input order. Self-loops are never paired.
    struct UndirectedSlot {
        std::uint32_t id;
        bool has_fwd;  // min(src,dst) -> max(src,dst)
        bool has_bwd;
    };
    std::map<std::pair<NodeId, NodeId>, std::vector<UndirectedSlot>> slots;
    std::uint32_t next_undirected = 0;

    for (const auto& spec : data.edges) {
        if (spec.src >= n || spec.dst >= n)
            throw std::invalid_argument("edge references unknown node");
        if (spec.cost < 0.0) throw std::invalid_argument("negative edge cost");
        if (spec.gain < 0.0) throw std::invalid_argument("negative edge gain");

        Edge e;
        e.src = spec.src;
        e.dst = spec.dst;
        e.cost = spec.cost;
        e.gain = spec.gain;
        e.id = static_cast<EdgeId>(edges_.size());

        if (spec.src == spec.dst) {
            e.undirected_id = next_undirected++;
        } else {
            auto key = std::minmax(spec.src, spec.dst);
            bool fwd = spec.src == key.first;
            auto& list = slots[{key.first, key.second}];
            auto it = std::find_if(list.begin(), list.end(), [&](const UndirectedSlot& s) {
                return fwd ? !s.has_fwd : !s.has_bwd;
            });
            if (it == list.end()) {
                list.push_back({next_undirected++, false, false});
                it = std::prev(list.end());
            }
            (fwd ? it->has_fwd : it->has_bwd) = true;
            e.undirected_id = it->id;
        }

        edges_.push_back(e);
        maxspeed_.push_back(spec.maxspeed);
    }
    undirected_count_ = next_undirected;

    out_adj_.resize(n);
    in_adj_.resize(n);
    for (const Edge& e : edges_) {
        out_adj_[e.src].push_back(e);
        in_adj_[e.dst].push_back(e);
    }
}

std::optional<NodeId> CostGainGraph::find_node(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t CostGainGraph::undirected_degree(NodeId v) const {
    std::unordered_set<std::uint32_t> segs;
    for (const Edge& e : out_adj_[v]) segs.insert(e.undirected_id);
    for (const Edge& e : in_adj_[v]) segs.insert(e.undirected_id);
    return static_cast<std::uint32_t>(segs.size());
}

bool CostGainGraph::has_self_loop(NodeId v) const {
    for (const Edge& e : out_adj_[v])
        if (e.dst == v) return true;
    return false;
}

// ---------------------------------------------------------------------------
// edge-list format

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

double parse_double(std::string_view tok, std::size_t line_no, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
        throw io_error(IoErrorKind::malformed_line, line_no,
                       "line " + std::to_string(line_no) + ": bad " + what + " '" +
                           std::string(tok) + "'");
    return v;
}

}  // namespace

CostGainGraph parse_graph(std::string_view text, CoordMode default_mode) {
    GraphData data;
    data.mode = default_mode;
    std::unordered_map<std::string, NodeId> ids;

    struct PendingEdge {
        GraphData::EdgeSpec spec;
        bool cost_from_coords;
        std::size_t line_no;
    };
    std::vector<PendingEdge> pending;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tok = tokenize(line);
        if (tok.empty()) continue;

        if (tok[0] == "@mode") {
            if (tok.size() != 2)
                throw io_error(IoErrorKind::malformed_line, line_no,
                               "line " + std::to_string(line_no) + ": @mode takes one value");
            auto m = coord_mode_from_string(tok[1]);
            if (!m)
                throw io_error(IoErrorKind::malformed_line, line_no,
                               "line " + std::to_string(line_no) + ": unknown mode '" +
                                   std::string(tok[1]) + "'");
            data.mode = *m;
        } else if (tok[0] == "@contracted") {
            data.contracted = true;
        } else if (tok[0] == "N") {
            if (tok.size() != 2 && tok.size() != 4)
                throw io_error(IoErrorKind::malformed_line, line_no,
                               "line " + std::to_string(line_no) +
                                   ": N expects 'N <id>' or 'N <id> <x> <y>'");
            std::string name(tok[1]);
            if (ids.count(name))
                throw io_error(IoErrorKind::duplicate_node, line_no,
                               "line " + std::to_string(line_no) + ": duplicate node '" + name +
                                   "'");
            std::optional<Coords> xy;
            if (tok.size() == 4)
                xy = Coords{parse_double(tok[2], line_no, "x coordinate"),
                            parse_double(tok[3], line_no, "y coordinate")};
            NodeId id = data.add_node(name, xy);
            ids.emplace(std::move(name), id);
        } else if (tok[0] == "E") {
            if (tok.size() != 5 && tok.size() != 6)
                throw io_error(IoErrorKind::malformed_line, line_no,
                               "line " + std::to_string(line_no) +
                                   ": E expects 'E <src> <dst> <cost|-> <gain> [maxspeed]'");
            auto node_of = [&](std::string_view name) {
                auto it = ids.find(std::string(name));
                if (it == ids.end())
                    throw io_error(IoErrorKind::dangling_node, line_no,
                                   "line " + std::to_string(line_no) + ": unknown node '" +
                                       std::string(name) + "'");
                return it->second;
            };
            PendingEdge pe;
            pe.line_no = line_no;
            pe.spec.src = node_of(tok[1]);
            pe.spec.dst = node_of(tok[2]);
            pe.cost_from_coords = tok[3] == "-";
            if (!pe.cost_from_coords) {
                pe.spec.cost = parse_double(tok[3], line_no, "cost");
                if (pe.spec.cost < 0.0)
                    throw io_error(IoErrorKind::negative_cost, line_no,
                                   "line " + std::to_string(line_no) + ": negative cost");
            }
            pe.spec.gain = parse_double(tok[4], line_no, "gain");
            if (pe.spec.gain < 0.0)
                throw io_error(IoErrorKind::negative_gain, line_no,
                               "line " + std::to_string(line_no) + ": negative gain");
            if (tok.size() == 6) pe.spec.maxspeed = parse_double(tok[5], line_no, "maxspeed");
            pending.push_back(std::move(pe));
        } else {
            throw io_error(IoErrorKind::malformed_line, line_no,
                           "line " + std::to_string(line_no) + ": unknown record '" +
                               std::string(tok[0]) + "'");
        }
    }

    for (auto& pe : pending) {
        if (pe.cost_from_coords) {
            const auto& a = data.coords[pe.spec.src];
            const auto& b = data.coords[pe.spec.dst];
            if (data.mode == CoordMode::none || !a || !b)
                throw io_error(IoErrorKind::missing_coordinates, pe.line_no,
                               "line " + std::to_string(pe.line_no) +
                                   ": cost '-' needs coordinates on both endpoints and a "
                                   "coordinate mode");
            if (data.mode == CoordMode::geo)
                pe.spec.cost = haversine_m(a->y, a->x, b->y, b->x);
            else
                pe.spec.cost = std::hypot(a->x - b->x, a->y - b->y);
        }
        data.edges.push_back(pe.spec);
    }

    return CostGainGraph(std::move(data));
}

CostGainGraph load_graph(const std::filesystem::path& path, CoordMode default_mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error(IoErrorKind::file_not_found, 0,
                       "cannot open graph file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), default_mode);
}

std::string serialize_graph(const CostGainGraph& g) {
    std::string out;
    out += "@mode ";
    out += to_string(g.coord_mode());
    out += '\n';
    if (g.contracted()) out += "@contracted\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out += "N ";
        out += g.node_name(v);
        if (const auto& xy = g.coords(v)) {
            out += ' ';
            out += format_number(xy->x);
            out += ' ';
            out += format_number(xy->y);
        }
        out += '\n';
    }
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        out += "E ";
        out += g.node_name(e.src);
        out += ' ';
        out += g.node_name(e.dst);
        out += ' ';
        out += format_number(e.cost);
        out += ' ';
        out += format_number(e.gain);
        if (auto ms = g.maxspeed(id)) {
            out += ' ';
            out += format_number(*ms);
        }
        out += '\n';
    }
    return out;
}

void save_graph(const CostGainGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error(IoErrorKind::file_not_found, 0,
                       "cannot write graph file '" + path.string() + "'");
    out << serialize_graph(g);
}

// ---------------------------------------------------------------------------
// gain policy

CostGainGraph assign_gain_policy(const CostGainGraph& g,
                                 std::span<const std::optional<double>> maxspeed_by_edge,
                                 double threshold_kmh, double default_maxspeed_kmh) {
    GraphData data;
    data.mode = g.coord_mode();
    data.contracted = g.contracted();
    for (NodeId v = 0; v < g.node_count(); ++v) data.add_node(g.node_name(v), g.coords(v));
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        std::optional<double> ms =
            id < maxspeed_by_edge.size() ? maxspeed_by_edge[id] : std::nullopt;
        double speed = ms.value_or(default_maxspeed_kmh);
        data.edges.push_back({e.src, e.dst, e.cost, speed < threshold_kmh ? 1.0 : 0.0, ms});
    }
    return CostGainGraph(std::move(data));
}

CostGainGraph assign_gain_policy(const CostGainGraph& g, double threshold_kmh,
                                 double default_maxspeed_kmh) {
    std::vector<std::optional<double>> tags;
    tags.reserve(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) tags.push_back(g.maxspeed(id));
    return assign_gain_policy(g, tags, threshold_kmh, default_maxspeed_kmh);
}

// ---------------------------------------------------------------------------
// degree-2 contraction

namespace {

// The two distinct neighbours of a removable node, or nothing.
std::optional<std::pair<NodeId, NodeId>> chain_neighbours(const CostGainGraph& g, NodeId v) {
    std::unordered_set<NodeId> nbs;
    for (const Edge& e : g.out_edges(v)) nbs.insert(e.dst);
    for (const Edge& e : g.in_edges(v)) nbs.insert(e.src);
    nbs.erase(v);
    if (nbs.size() != 2) return std::nullopt;
    auto it = nbs.begin();
    NodeId a = *it++;
    NodeId b = *it;
    return std::make_pair(a, b);
}

struct Hop {
    const Edge* fwd = nullptr;  // from -> to
    const Edge* bwd = nullptr;  // to -> from
    bool parallel = false;      // more than one edge in one direction
};

Hop hop_between(const CostGainGraph& g, NodeId from, NodeId to) {
    Hop h;
    for (const Edge& e : g.out_edges(from))
        if (e.dst == to) {
            if (h.fwd) h.parallel = true;
            h.fwd = &e;
        }
    for (const Edge& e : g.out_edges(to))
        if (e.dst == from) {
            if (h.bwd) h.parallel = true;
            h.bwd = &e;
        }
    return h;
}

}  // namespace

CostGainGraph contract_degree2(const CostGainGraph& g, std::span<const NodeId> keep) {
    const std::size_t n = g.node_count();
    std::vector<char> removable(n, 0);
    {
        std::vector<char> kept(n, 0);
        for (NodeId v : keep) {
            if (v >= n) throw std::invalid_argument("keep set references unknown node");
            kept[v] = 1;
        }
        for (NodeId v = 0; v < n; ++v)
            removable[v] = !kept[v] && g.undirected_degree(v) == 2 && !g.has_self_loop(v) &&
                           chain_neighbours(g, v).has_value();
    }

    // Walk maximal chains from each anchor. A chain merges only when every
    // hop is two-way or every hop is one-way in the walk direction; anything
    // mixed, parallel, or cycling back to the anchor is left alone.
    std::vector<char> consumed(n, 0);           // interior nodes dropped
    std::vector<char> edge_consumed(g.edge_count(), 0);
    struct Composite {
        NodeId src, dst;
        double cost, gain;
        bool two_way;
        double rcost, rgain;  // reverse direction, when two_way
    };
    std::vector<Composite> composites;

    for (NodeId anchor = 0; anchor < n; ++anchor) {
        if (removable[anchor]) continue;
        std::unordered_set<NodeId> started;  // first interior node per walk
        for (const Edge& e : g.out_edges(anchor)) {
            if (!removable[e.dst] || consumed[e.dst] || e.dst == anchor) continue;
            if (!started.insert(e.dst).second) continue;
            // collect the node chain anchor, m1, m2, ..., far
            std::vector<NodeId> nodes{anchor, e.dst};
            NodeId prev = anchor, cur = e.dst;
            bool ok = true;
            while (removable[cur]) {
                auto nb = chain_neighbours(g, cur);
                NodeId next = (nb->first == prev) ? nb->second : nb->first;
                nodes.push_back(next);
                prev = cur;
                cur = next;
                if (cur == anchor) break;  // chain cycles back; leave it
            }
            if (cur == anchor) continue;
            // classify hops
            bool all_two_way = true, all_one_way_fwd = true;
            std::vector<Hop> hops;
            for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
                Hop h = hop_between(g, nodes[i], nodes[i + 1]);
                if (h.parallel) {
                    ok = false;
                    break;
                }
                if (!(h.fwd && h.bwd)) all_two_way = false;
                if (!(h.fwd && !h.bwd)) all_one_way_fwd = false;
                hops.push_back(h);
            }
            if (!ok || !(all_two_way || all_one_way_fwd)) continue;

            Composite c{nodes.front(), nodes.back(), 0.0, 0.0, all_two_way, 0.0, 0.0};
            for (const Hop& h : hops) {
                c.cost += h.fwd->cost;
                c.gain += h.fwd->gain;
                if (all_two_way) {
                    c.rcost += h.bwd->cost;
                    c.rgain += h.bwd->gain;
                }
            }
            composites.push_back(c);
            for (std::size_t i = 1; i + 1 < nodes.size(); ++i) consumed[nodes[i]] = 1;
            for (const Hop& h : hops) {
                edge_consumed[h.fwd->id] = 1;
                if (h.bwd) edge_consumed[h.bwd->id] = 1;
            }
        }
    }

    GraphData data;
    data.mode = g.coord_mode();
    std::vector<NodeId> remap(n, 0);
    for (NodeId v = 0; v < n; ++v)
        if (!consumed[v]) remap[v] = data.add_node(g.node_name(v), g.coords(v));
    data.contracted = g.contracted() || data.names.size() < n;

    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (edge_consumed[id]) continue;
        const Edge& e = g.edge(id);
        data.edges.push_back({remap[e.src], remap[e.dst], e.cost, e.gain, g.maxspeed(id)});
    }
    // Composite directions are adjacent so they pair onto one segment.
    for (const Composite& c : composites) {
        data.edges.push_back({remap[c.src], remap[c.dst], c.cost, c.gain, std::nullopt});
        if (c.two_way)
            data.edges.push_back({remap[c.dst], remap[c.src], c.rcost, c.rgain, std::nullopt});
    }
    return CostGainGraph(std::move(data));
}

}  // namespace mgrq
