#include "mgrq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mgrq/json_io.hpp"
#include "mgrq/oracle.hpp"
#include "mgrq/search.hpp"

namespace mgrq {

std::string_view to_string(Algo algo) {
    switch (algo) {
        case Algo::uni: return "uni";
        case Algo::bidi: return "bidi";
        case Algo::oracle: return "oracle";
    }
    return "uni";
}

std::optional<Algo> algo_from_string(std::string_view s) {
    if (s == "uni") return Algo::uni;
    if (s == "bidi") return Algo::bidi;
    if (s == "oracle") return Algo::oracle;
    return std::nullopt;
}

QueryResult run_algo(const CostGainGraph& g, Algo algo, const Query& q) {
    switch (algo) {
        case Algo::uni: return run_uni(g, q);
        case Algo::bidi: return run_bidi(g, q);
        case Algo::oracle: return oracle_front(g, q);
    }
    throw std::invalid_argument("unknown algorithm");
}

namespace {

struct Cell {
    Algo algo;
    std::uint32_t k;
    double tau;
};

BenchRow run_cell(const CostGainGraph& g, const BenchSpec& spec, const Cell& cell) {
    BenchRow row;
    row.algo = cell.algo;
    row.mode = spec.mode;
    row.k = spec.mode == Mode::rc ? cell.k : 0;
    row.tau = cell.tau;

    Query q;
    q.start = spec.start;
    q.tau = cell.tau;
    q.mode = spec.mode;
    q.rc.k = cell.k;
    q.rc.dominance_pruning = spec.dominance_pruning;

    std::vector<double> times;
    for (int rep = 0; rep < std::max(1, spec.repeat); ++rep) {
        q.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(spec.timeout_secs);
        try {
            QueryResult res = run_algo(g, cell.algo, q);
            times.push_back(res.stats.wall_time_ms);
            if (rep == 0) {
                row.nodes_visited = res.stats.nodes_visited;
                row.ways_expanded = res.stats.ways_expanded;
                row.front_size = res.front.size();
            }
        } catch (const search_timeout& t) {
            row.timed_out = true;
            row.nodes_visited = t.stats.nodes_visited;
            row.ways_expanded = t.stats.ways_expanded;
            times.push_back(spec.timeout_secs * 1000.0);
            break;
        } catch (const oracle_budget_exceeded&) {
            row.timed_out = true;
            break;
        }
    }
    if (!times.empty()) {
        std::sort(times.begin(), times.end());
        row.time_ms = times[times.size() / 2];
    }
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const CostGainGraph& g, const BenchSpec& spec) {
    if (spec.algos.empty()) throw std::invalid_argument("no algorithms selected");
    if (!(spec.tau_step > 0.0) || spec.tau_min > spec.tau_max || !(spec.tau_min > 0.0))
        throw std::invalid_argument("empty tau sweep range");
    if (spec.start >= g.node_count()) throw std::invalid_argument("unknown start node");

    std::vector<Cell> cells;
    std::vector<std::uint32_t> ks = spec.mode == Mode::rc ? spec.k_list : std::vector<std::uint32_t>{1};
    if (ks.empty()) throw std::invalid_argument("empty k list");
    for (Algo algo : spec.algos)
        for (std::uint32_t k : ks)
            for (double tau = spec.tau_min; tau <= spec.tau_max + 1e-9; tau += spec.tau_step)
                cells.push_back({algo, k, tau});

    std::vector<BenchRow> rows(cells.size());
    int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = run_cell(g, spec, cells[i]);
    } else {
        // The graph is immutable and shared; each worker owns its rows.
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                rows[i] = run_cell(g, spec, cells[i]);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = kBenchCsvHeader;
    out += '\n';
    for (const BenchRow& row : rows) {
        out += to_string(row.algo);
        out += ',';
        out += to_string(row.mode);
        out += ',';
        out += std::to_string(row.k);
        out += ',';
        out += format_number(row.tau);
        out += ',';
        out += format_number(row.time_ms);
        out += ',';
        out += std::to_string(row.nodes_visited);
        out += ',';
        out += std::to_string(row.ways_expanded);
        out += ',';
        out += std::to_string(row.front_size);
        out += ',';
        out += row.timed_out ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace mgrq
