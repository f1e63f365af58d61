#pragma once

#include <optional>

#include "mgrq/query.hpp"

namespace mgrq {

/// Unidirectional label-correcting search. Returns the exact Pareto front of
/// round trips at query.start with cost <= tau.
QueryResult run_uni(const CostGainGraph& g, const Query& q);

/// Bidirectional variant: forward ways from s and return ways to s, both
/// bounded near tau/2, joined into round trips. Same front as run_uni.
QueryResult run_bidi(const CostGainGraph& g, const Query& q);

/// Joins a forward way s->v with a return way v->s into a round trip.
/// Returns nothing when the trip exceeds tau or violates redundancy control.
/// In rc mode the gain is recomputed over the union of edge sets.
std::optional<Way> join_pair(const CostGainGraph& g, const Way& w_start,
                             const Way& w_ret, Mode mode, const RcConfig& rc,
                             double tau);

}  // namespace mgrq
