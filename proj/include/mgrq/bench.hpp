#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgrq/query.hpp"

namespace mgrq {

enum class Algo { uni, bidi, oracle };

std::string_view to_string(Algo algo);
std::optional<Algo> algo_from_string(std::string_view s);

QueryResult run_algo(const CostGainGraph& g, Algo algo, const Query& q);

struct BenchSpec {
    NodeId start = 0;
    double tau_min = 0.0;
    double tau_max = 0.0;
    double tau_step = 0.0;
    std::vector<Algo> algos;
    Mode mode = Mode::plain;
    std::vector<std::uint32_t> k_list = {1};  // ignored in plain mode
    bool dominance_pruning = true;
    int timeout_secs = 60;  // per cell
    int repeat = 3;         // time_ms is the median over repeats
    int jobs = 1;           // cells may run concurrently; output order is fixed
};

struct BenchRow {
    Algo algo = Algo::uni;
    Mode mode = Mode::plain;
    std::uint32_t k = 0;  // 0 in plain mode
    double tau = 0.0;
    double time_ms = 0.0;
    std::uint64_t nodes_visited = 0;
    std::uint64_t ways_expanded = 0;
    std::size_t front_size = 0;
    bool timed_out = false;
};

/// Runs the sweep; rows come back in (algo, k, tau) order as given by the
/// spec lists regardless of jobs. Counters are deterministic, time_ms is not.
std::vector<BenchRow> run_bench(const CostGainGraph& g, const BenchSpec& spec);

inline constexpr const char* kBenchCsvHeader =
    "algo,mode,k,tau,time_ms,nodes_visited,ways_expanded,front_size,timed_out";

std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace mgrq
