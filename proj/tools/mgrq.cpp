#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mgrq/bench.hpp"
#include "mgrq/json_io.hpp"
#include "mgrq/oracle.hpp"
#include "mgrq/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGraph = 3;

class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw mgrq::io_error(mgrq::IoErrorKind::file_not_found, 0,
                                   "cannot write output file '" + out_path + "'");
    out << text;
}

mgrq::NodeId resolve_node(const mgrq::CostGainGraph& g, const std::string& name) {
    auto id = g.find_node(name);
    if (!id) throw usage_error("unknown node '" + name + "'");
    return *id;
}

struct QueryArgs {
    std::string graph;
    std::string start;
    double tau = 0.0;
    std::string algo = "uni";
    std::string mode = "plain";
    std::uint32_t k = 1;
    bool dominance_pruning = true;
    std::string out;
    std::string format = "json";
};

int cmd_query(const QueryArgs& args) {
    auto algo = mgrq::algo_from_string(args.algo);
    if (!algo) throw usage_error("unknown algorithm '" + args.algo + "'");
    if (args.format != "json" && args.format != "csv")
        throw usage_error("unknown format '" + args.format + "'");
    if (!(args.tau > 0.0)) throw usage_error("tau must be positive");
    if (args.k < 1) throw usage_error("k must be >= 1");

    mgrq::CostGainGraph g = mgrq::load_graph(args.graph);

    mgrq::Query q;
    q.start = resolve_node(g, args.start);
    q.tau = args.tau;
    q.mode = args.mode == "rc" ? mgrq::Mode::rc : mgrq::Mode::plain;
    if (args.mode != "rc" && args.mode != "plain")
        throw usage_error("unknown mode '" + args.mode + "'");
    q.rc.k = args.k;
    q.rc.dominance_pruning = args.dominance_pruning;

    // A contracted chain hides its internal edge multiplicities, which makes
    // redundancy accounting on the merged edges meaningless.
    if (q.mode == mgrq::Mode::rc && g.contracted())
        throw usage_error(
            "redundancy-control queries are not supported on contracted graphs; "
            "re-run the conversion without contraction");

    mgrq::QueryResult res = mgrq::run_algo(g, *algo, q);
    write_output(args.format == "json" ? mgrq::front_to_json(g, res)
                                       : mgrq::front_to_csv(g, res),
                 args.out);
    std::cerr << "stats: nodes_visited=" << res.stats.nodes_visited
              << " ways_expanded=" << res.stats.ways_expanded
              << " wall_time_ms=" << mgrq::format_number(res.stats.wall_time_ms) << "\n";
    return kExitOk;
}

struct BenchArgs {
    std::string graph;
    std::string start;
    double tau_min = 0.0, tau_max = 0.0, tau_step = 0.0;
    std::vector<std::string> algos;
    std::string mode = "plain";
    std::vector<std::uint32_t> k_list = {1};
    bool dominance_pruning = true;
    int timeout_secs = 60;
    int repeat = 3;
    int jobs = 1;
    std::string out;
};

int cmd_bench(const BenchArgs& args) {
    mgrq::CostGainGraph g = mgrq::load_graph(args.graph);

    mgrq::BenchSpec spec;
    spec.start = resolve_node(g, args.start);
    spec.tau_min = args.tau_min;
    spec.tau_max = args.tau_max;
    spec.tau_step = args.tau_step;
    for (const std::string& name : args.algos) {
        auto algo = mgrq::algo_from_string(name);
        if (!algo) throw usage_error("unknown algorithm '" + name + "'");
        spec.algos.push_back(*algo);
    }
    if (args.mode != "rc" && args.mode != "plain")
        throw usage_error("unknown mode '" + args.mode + "'");
    spec.mode = args.mode == "rc" ? mgrq::Mode::rc : mgrq::Mode::plain;
    spec.k_list = args.k_list;
    spec.dominance_pruning = args.dominance_pruning;
    spec.timeout_secs = args.timeout_secs;
    spec.repeat = args.repeat;
    spec.jobs = args.jobs;
    if (spec.mode == mgrq::Mode::rc && g.contracted())
        throw usage_error(
            "redundancy-control queries are not supported on contracted graphs; "
            "re-run the conversion without contraction");

    try {
        std::vector<mgrq::BenchRow> rows = mgrq::run_bench(g, spec);
        write_output(mgrq::bench_to_csv(rows), args.out);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    return kExitOk;
}

struct ConvertArgs {
    std::string in;
    std::string out;
    std::vector<std::string> keep;
    double gain_threshold_kmh = 30.0;
    double default_maxspeed_kmh = 50.0;
};

int cmd_convert(const ConvertArgs& args) {
    mgrq::CostGainGraph g = mgrq::load_graph(args.in);
    g = mgrq::assign_gain_policy(g, args.gain_threshold_kmh, args.default_maxspeed_kmh);
    std::vector<mgrq::NodeId> keep;
    keep.reserve(args.keep.size());
    for (const std::string& name : args.keep) keep.push_back(resolve_node(g, name));
    g = mgrq::contract_degree2(g, keep);
    mgrq::save_graph(g, args.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum gain round trip queries on cost-gain networks"};
    app.require_subcommand(1);

    QueryArgs qa;
    CLI::App* query = app.add_subcommand("query", "run one query and emit the Pareto front");
    query->add_option("--graph", qa.graph, "graph file")->required();
    query->add_option("--start", qa.start, "start node")->required();
    query->add_option("--tau", qa.tau, "cost budget")->required();
    query->add_option("--algo", qa.algo, "uni|bidi|oracle");
    query->add_option("--mode", qa.mode, "plain|rc");
    query->add_option("--k", qa.k, "redundancy level (rc mode)");
    query->add_option("--dominance-pruning", qa.dominance_pruning,
                      "dominance pruning in rc mode (true|false)");
    query->add_option("--out", qa.out, "output file (default stdout)");
    query->add_option("--format", qa.format, "json|csv");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "sweep tau/k and emit a CSV of counters");
    bench->add_option("--graph", ba.graph, "graph file")->required();
    bench->add_option("--start", ba.start, "start node")->required();
    bench->add_option("--tau-min", ba.tau_min, "sweep start")->required();
    bench->add_option("--tau-max", ba.tau_max, "sweep end (inclusive)")->required();
    bench->add_option("--tau-step", ba.tau_step, "sweep step")->required();
    bench->add_option("--algos", ba.algos, "comma separated algorithms")
        ->required()
        ->delimiter(',');
    bench->add_option("--mode", ba.mode, "plain|rc");
    bench->add_option("--k-list", ba.k_list, "comma separated k values (rc mode)")
        ->delimiter(',');
    bench->add_option("--dominance-pruning", ba.dominance_pruning,
                      "dominance pruning in rc mode (true|false)");
    bench->add_option("--timeout-secs", ba.timeout_secs, "per-cell timeout");
    bench->add_option("--repeat", ba.repeat, "repeats per cell, median is reported");
    bench->add_option("--jobs", ba.jobs, "concurrent cells (counters stay deterministic)");
    bench->add_option("--out", ba.out, "output file (default stdout)");

    ConvertArgs ca;
    CLI::App* convert =
        app.add_subcommand("convert", "apply the gain policy and contract degree-2 chains");
    convert->add_option("--in", ca.in, "input graph file")->required();
    convert->add_option("--out", ca.out, "output graph file")->required();
    convert->add_option("--keep", ca.keep, "comma separated nodes to preserve")->delimiter(',');
    convert->add_option("--gain-threshold-kmh", ca.gain_threshold_kmh,
                        "maxspeed below this gets gain 1");
    convert->add_option("--default-maxspeed-kmh", ca.default_maxspeed_kmh,
                        "assumed maxspeed for untagged edges");

    try {
        app.parse(argc, argv);
        if (query->parsed()) return cmd_query(qa);
        if (bench->parsed()) return cmd_bench(ba);
        if (convert->parsed()) return cmd_convert(ca);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mgrq::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const mgrq::oracle_budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const mgrq::search_timeout& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGraph;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGraph;
    }
}
