#pragma once

#include <chrono>
#include <optional>
#include <queue>
#include <stdexcept>

#include "mgrq/query.hpp"

namespace mgrq::detail {

inline void validate_query(const CostGainGraph& g, const Query& q) {
    if (!(q.tau > 0.0)) throw std::invalid_argument("tau must be positive");
    if (q.start >= g.node_count()) throw std::invalid_argument("unknown start node");
    if (q.mode == Mode::rc && q.rc.k < 1)
        throw std::invalid_argument("redundancy level k must be >= 1");
}

class Deadline {
public:
    explicit Deadline(const Query& q) : deadline_(q.deadline) {}

    void poll(const SearchStats& stats) {
        if (!deadline_ || (++count_ & 1023u) != 0) return;
        if (std::chrono::steady_clock::now() > *deadline_) throw search_timeout(stats);
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t count_ = 0;
};

/// Max-gain node queue with lazy reinsertion: a new entry is pushed whenever
/// a node's best unprocessed gain rises; entries whose priority no longer
/// matches are skipped on pop. Gain ties break on the larger node id.
class GainQueue {
public:
    void push(NodeId v, double gain) { pq_.emplace(gain, v); }

    std::optional<std::pair<double, NodeId>> pop() {
        if (pq_.empty()) return std::nullopt;
        auto top = pq_.top();
        pq_.pop();
        return top;
    }

private:
    std::priority_queue<std::pair<double, NodeId>> pq_;
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace mgrq::detail
