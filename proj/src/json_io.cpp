#include "mgrq/json_io.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace mgrq {

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

// Integral costs and gains render as JSON integers.
nlohmann::json json_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15)
        return static_cast<std::int64_t>(v);
    return v;
}

nlohmann::json nodes_array(const CostGainGraph& g, const Way& way) {
    nlohmann::json nodes = nlohmann::json::array();
    for (NodeId v : way.node_sequence(g)) nodes.push_back(g.node_name(v));
    return nodes;
}

}  // namespace

std::string way_to_json(const CostGainGraph& g, const Way& way, Mode mode) {
    auto [cost, gain] = label_of(way, mode);
    nlohmann::json j;
    j["nodes"] = nodes_array(g, way);
    j["cost"] = json_number(cost);
    j["gain"] = json_number(gain);
    return j.dump();
}

std::string front_to_json(const CostGainGraph& g, const QueryResult& result) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FrontEntry& entry : result.front) {
        nlohmann::json j;
        j["cost"] = json_number(entry.cost);
        j["gain"] = json_number(entry.gain);
        j["nodes"] = nodes_array(g, entry.way);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string front_to_csv(const CostGainGraph& g, const QueryResult& result) {
    std::string out = "cost,gain,node_path\n";
    for (const FrontEntry& entry : result.front) {
        out += format_number(entry.cost);
        out += ',';
        out += format_number(entry.gain);
        out += ',';
        bool first = true;
        for (NodeId v : entry.way.node_sequence(g)) {
            if (!first) out += ' ';
            out += g.node_name(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace mgrq
