#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mgrq {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class CoordMode { geo, plane, none };

std::string_view to_string(CoordMode mode);
std::optional<CoordMode> coord_mode_from_string(std::string_view s);

/// Directed edge with non-negative cost and gain. The two directions of a
/// physical segment carry independent attributes but share undirected_id.
struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    double cost = 0.0;
    double gain = 0.0;
    EdgeId id = 0;
    std::uint32_t undirected_id = 0;
};

struct Coords {
    double x = 0.0;  // lon in geo mode
    double y = 0.0;  // lat in geo mode
};

enum class IoErrorKind {
    file_not_found,
    malformed_line,
    negative_cost,
    negative_gain,
    dangling_node,
    missing_coordinates,
    duplicate_node,
};

class io_error : public std::runtime_error {
public:
    io_error(IoErrorKind kind, std::size_t line, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line) {}
    IoErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }  // 1-based, 0 when not tied to a line

private:
    IoErrorKind kind_;
    std::size_t line_;
};

/// Mutable assembly form consumed by the CostGainGraph constructor.
struct GraphData {
    struct EdgeSpec {
        NodeId src = 0;
        NodeId dst = 0;
        double cost = 0.0;
        double gain = 0.0;
        std::optional<double> maxspeed;
    };
    std::vector<std::string> names;
    std::vector<std::optional<Coords>> coords;
    std::vector<EdgeSpec> edges;
    CoordMode mode = CoordMode::none;
    bool contracted = false;

    NodeId add_node(std::string name, std::optional<Coords> xy = std::nullopt);
};

/// Immutable cost-gain network. Node ids are dense 0..|V|-1, edge ids dense
/// 0..|E|-1 in declaration order. Safe to share across concurrent queries.
class CostGainGraph {
public:
    CostGainGraph() = default;
    explicit CostGainGraph(GraphData data);

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::uint32_t undirected_count() const { return undirected_count_; }

    std::span<const Edge> out_edges(NodeId v) const { return out_adj_[v]; }
    std::span<const Edge> in_edges(NodeId v) const { return in_adj_[v]; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    const std::string& node_name(NodeId v) const { return names_[v]; }
    std::optional<NodeId> find_node(std::string_view name) const;
    const std::optional<Coords>& coords(NodeId v) const { return coords_[v]; }
    std::optional<double> maxspeed(EdgeId id) const { return maxspeed_[id]; }

    CoordMode coord_mode() const { return mode_; }
    bool contracted() const { return contracted_; }

    /// Undirected degree: number of incident segments (self-loops count once).
    std::uint32_t undirected_degree(NodeId v) const;
    bool has_self_loop(NodeId v) const;

private:
    std::vector<std::string> names_;
    std::vector<std::optional<Coords>> coords_;
    std::vector<Edge> edges_;
    std::vector<std::optional<double>> maxspeed_;
    std::vector<std::vector<Edge>> out_adj_;
    std::vector<std::vector<Edge>> in_adj_;
    std::unordered_map<std::string, NodeId> name_index_;
    CoordMode mode_ = CoordMode::none;
    bool contracted_ = false;
    std::uint32_t undirected_count_ = 0;
};

/// Great-circle distance in meters (R = 6371 km).
double haversine_m(double lat1, double lon1, double lat2, double lon2);

// --- edge-list format ---------------------------------------------------
//
//   # comment                    full-line or trailing
//   @mode geo|plane|none         coordinate interpretation
//   @contracted                  marks output of degree-2 contraction
//   N <id> [<x> <y>]             node, optional coordinates
//   E <src> <dst> <cost|-> <gain> [maxspeed]
//
// "-" as cost means compute from endpoint coordinates (haversine meters in
// geo mode, Euclidean in plane mode).

CostGainGraph load_graph(const std::filesystem::path& path,
                         CoordMode default_mode = CoordMode::none);
CostGainGraph parse_graph(std::string_view text,
                          CoordMode default_mode = CoordMode::none);

std::string serialize_graph(const CostGainGraph& g);
void save_graph(const CostGainGraph& g, const std::filesystem::path& path);

/// gain(e) = 1 if maxspeed(e) < threshold_kmh else 0. Edges without a tag
/// use default_maxspeed_kmh.
CostGainGraph assign_gain_policy(const CostGainGraph& g,
                                 std::span<const std::optional<double>> maxspeed_by_edge,
                                 double threshold_kmh = 30.0,
                                 double default_maxspeed_kmh = 50.0);
CostGainGraph assign_gain_policy(const CostGainGraph& g,
                                 double threshold_kmh = 30.0,
                                 double default_maxspeed_kmh = 50.0);

/// Replaces maximal chains of removable degree-2 nodes by one edge per
/// direction with summed cost and gain. Nodes in keep, nodes of degree != 2,
/// nodes with self-loops and nodes whose two segments lead to the same
/// neighbour are retained. Chains are only merged when every hop carries
/// both directions or every hop is one-way in the same orientation.
CostGainGraph contract_degree2(const CostGainGraph& g, std::span<const NodeId> keep);

}  // namespace mgrq
