#pragma once

#include <string>

#include "mgrq/query.hpp"

namespace mgrq {

/// Integral values print without a decimal point, everything else as the
/// shortest round-trip decimal.
std::string format_number(double v);

/// {"nodes":[...], "cost":c, "gain":g}
std::string way_to_json(const CostGainGraph& g, const Way& way, Mode mode);

/// Array of {"cost":c, "gain":g, "nodes":[...]}, cost-ascending.
std::string front_to_json(const CostGainGraph& g, const QueryResult& result);

/// Header cost,gain,node_path; node paths are space-joined node names.
std::string front_to_csv(const CostGainGraph& g, const QueryResult& result);

}  // namespace mgrq
