// Acceptance suite: one self-contained check per criterion, one PASS/FAIL
// line each, exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "mgrq/bench.hpp"
#include "mgrq/json_io.hpp"
#include "mgrq/oracle.hpp"
#include "mgrq/pareto.hpp"
#include "mgrq/search.hpp"
#include "test_support.hpp"

using namespace mgrq;
using mgrq::testing::Rng;

namespace {

constexpr std::uint64_t kOracleBudget = 3'000'000;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Query make_query(NodeId start, double tau, Mode mode, std::uint32_t k = 1, bool pruning = true) {
    Query q;
    q.start = start;
    q.tau = tau;
    q.mode = mode;
    q.rc.k = k;
    q.rc.dominance_pruning = pruning;
    return q;
}

// ---------------------------------------------------------------------------
// 1. Oracle equivalence on >= 200 random graphs, both algorithms, all modes.

bool criterion1(std::string& detail) {
    Rng rng(10001);
    int compared = 0, skipped = 0;
    int attempts = 0;
    while (compared < 200 && attempts < 400) {
        ++attempts;
        auto g = testing::random_graph(rng);
        bool graph_ok = true;
        try {
            for (double tau : {4.0, 8.0, 12.0}) {
                std::vector<Query> queries{make_query(0, tau, Mode::plain)};
                for (std::uint32_t k : {1u, 2u, 3u})
                    queries.push_back(make_query(0, tau, Mode::rc, k));
                for (const Query& q : queries) {
                    auto expect = oracle_front(g, q, kOracleBudget);
                    auto uni = run_uni(g, q);
                    auto bidi = run_bidi(g, q);
                    std::string why;
                    if (!testing::same_labels(uni, expect) ||
                        !testing::same_labels(bidi, expect)) {
                        detail = "front mismatch (tau=" + std::to_string(q.tau) + ", mode=" +
                                 std::string(to_string(q.mode)) + ", k=" + std::to_string(q.rc.k) +
                                 "): uni=" + testing::describe_labels(uni) +
                                 " bidi=" + testing::describe_labels(bidi) +
                                 " oracle=" + testing::describe_labels(expect);
                        return false;
                    }
                    if (!testing::validate_result(g, q, uni, &why) ||
                        !testing::validate_result(g, q, bidi, &why)) {
                        detail = "witness validation failed: " + why;
                        return false;
                    }
                }
            }
        } catch (const oracle_budget_exceeded&) {
            ++skipped;
            graph_ok = false;  // instance too large for the reference, resample
        }
        if (graph_ok) ++compared;
    }
    if (compared < 200) {
        detail = "only " + std::to_string(compared) + " graphs compared";
        return false;
    }
    detail = std::to_string(compared) + " graphs x 3 tau x 4 modes, exact label equality (" +
             std::to_string(skipped) + " oversized instances resampled)";
    return true;
}

// ---------------------------------------------------------------------------
// 2. Triangle fixture regression against the frozen golden fronts.

bool criterion2(std::string& detail) {
    auto g = load_graph(std::string(MGRQ_DATA_DIR) + "/triangle.cgn");
    NodeId a = *g.find_node("a");

    struct Case {
        Query query;
        const char* golden;
        std::vector<Label> labels;
    };
    std::vector<Case> cases{
        {make_query(a, 3.0, Mode::plain), "triangle_plain_tau3.json", {{2, 4}, {3, 6}}},
        {make_query(a, 3.0, Mode::rc, 1), "triangle_rc_k1_tau3.json", {{3, 6}}},
    };
    for (const Case& c : cases) {
        auto uni = run_uni(g, c.query);
        auto bidi = run_bidi(g, c.query);
        auto check_labels = [&](const QueryResult& res, const char* algo) {
            if (res.front.size() != c.labels.size()) return false;
            for (std::size_t i = 0; i < c.labels.size(); ++i)
                if (res.front[i].cost != c.labels[i].cost ||
                    res.front[i].gain != c.labels[i].gain)
                    return false;
            (void)algo;
            return true;
        };
        if (!check_labels(uni, "uni") || !check_labels(bidi, "bidi")) {
            detail = std::string("front differs from frozen labels for ") + c.golden + ": uni=" +
                     testing::describe_labels(uni) + " bidi=" + testing::describe_labels(bidi);
            return false;
        }
        std::string golden = slurp(std::string(MGRQ_GOLDEN_DIR) + "/" + c.golden);
        std::string actual = front_to_json(g, uni);
        if (actual != golden) {
            detail = std::string("uni output does not match golden file ") + c.golden;
            return false;
        }
    }
    detail = "plain [(2,4),(3,6)] and rc k=1 [(3,6)] match the golden files";
    return true;
}

// ---------------------------------------------------------------------------
// 3. Pruning soundness ablation: identical fronts, ordered expansion counts.

bool criterion3(std::string& detail) {
    Rng rng(30003);
    const double tau = 8.0;
    double mean_on_k3 = 0.0, mean_off_k3 = 0.0;
    int n = 0;
    for (int i = 0; i < 60; ++i) {
        auto g = testing::random_graph(rng);
        for (std::uint32_t k : {2u, 3u}) {
            for (auto* run : {&run_uni, &run_bidi}) {
                auto on = run(g, make_query(0, tau, Mode::rc, k, true));
                auto off = run(g, make_query(0, tau, Mode::rc, k, false));
                if (!testing::same_labels(on, off)) {
                    detail = "pruning changed the front at k=" + std::to_string(k) + ": " +
                             testing::describe_labels(on) + " vs " +
                             testing::describe_labels(off);
                    return false;
                }
                if (on.stats.ways_expanded > off.stats.ways_expanded) {
                    detail = "pruning expanded more ways at k=" + std::to_string(k) + " (" +
                             std::to_string(on.stats.ways_expanded) + " > " +
                             std::to_string(off.stats.ways_expanded) + ")";
                    return false;
                }
                if (k == 3 && run == &run_uni) {
                    mean_on_k3 += static_cast<double>(on.stats.ways_expanded);
                    mean_off_k3 += static_cast<double>(off.stats.ways_expanded);
                    ++n;
                }
            }
        }
    }
    mean_on_k3 /= n;
    mean_off_k3 /= n;
    if (!(mean_off_k3 > mean_on_k3)) {
        detail = "unpruned mean " + std::to_string(mean_off_k3) +
                 " not above pruned mean " + std::to_string(mean_on_k3) + " at k=3";
        return false;
    }
    std::ostringstream os;
    os << "fronts identical on 60 graphs, expansions(on) <= expansions(off) everywhere; "
       << "k=3 means " << mean_on_k3 << " (on) vs " << mean_off_k3 << " (off)";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------------------
// 4. Bidirectional search-space reduction on grids.

bool criterion4(std::string& detail) {
    Rng rng(40004);
    for (std::uint32_t side : {10u, 20u, 30u}) {
        auto g = testing::grid_graph(side, side, rng);
        NodeId start = testing::grid_center(g, side, side);
        for (double tau : {2.0, 4.0, 6.0, 8.0, 10.0, 12.0}) {
            auto uni = run_uni(g, make_query(start, tau, Mode::plain));
            auto bidi = run_bidi(g, make_query(start, tau, Mode::plain));
            if (bidi.stats.nodes_visited > uni.stats.nodes_visited) {
                detail = "bidi visited more nodes on " + std::to_string(side) + "x" +
                         std::to_string(side) + " grid at tau=" + std::to_string(tau);
                return false;
            }
            if (tau > 4.0 && bidi.stats.nodes_visited >= uni.stats.nodes_visited) {
                detail = "no strict reduction on " + std::to_string(side) + "x" +
                         std::to_string(side) + " grid at tau=" + std::to_string(tau);
                return false;
            }
        }
    }
    detail = "bidi <= uni visited nodes on 10/20/30 grids for tau in {2..12}, strict past 4";
    return true;
}

// ---------------------------------------------------------------------------
// 5. Visited-node growth: monotone in tau, bounded by 2*tau^2.

bool criterion5(std::string& detail) {
    Rng rng(50005);
    for (std::uint32_t side : {10u, 20u, 30u}) {
        auto g = testing::grid_graph(side, side, rng);
        NodeId start = testing::grid_center(g, side, side);
        std::uint64_t prev = 0;
        for (double tau : {2.0, 4.0, 6.0, 8.0, 10.0, 12.0}) {
            auto bidi = run_bidi(g, make_query(start, tau, Mode::plain));
            std::uint64_t visited = bidi.stats.nodes_visited;
            if (visited < prev) {
                detail = "visited nodes dropped from " + std::to_string(prev) + " to " +
                         std::to_string(visited) + " at tau=" + std::to_string(tau);
                return false;
            }
            if (tau >= 4.0 && static_cast<double>(visited) > 2.0 * tau * tau) {
                detail = "area bound broken: " + std::to_string(visited) + " > 2*tau^2 at tau=" +
                         std::to_string(tau);
                return false;
            }
            prev = visited;
        }
    }
    detail = "nodes_visited(bidi) nondecreasing in tau and within 2*tau^2 for tau >= 4";
    return true;
}

// ---------------------------------------------------------------------------
// 6. Split completeness: every enumerated round trip splits at tau/2.

bool criterion6(std::string& detail) {
    Rng rng(60006);
    const double tau = 8.0;
    std::uint64_t trips = 0;
    for (int i = 0; i < 60; ++i) {
        testing::RandomGraphOptions opts;
        opts.max_nodes = 9;
        auto g = testing::random_graph(rng, opts);
        auto ways = testing::enumerate_ways(g, 0, tau);
        for (const Way& w : ways) {
            if (!w.is_round_trip()) continue;
            ++trips;
            // canonical split: shortest prefix whose cost crosses tau/2,
            // or the whole trip with an empty return part
            bool ok = false;
            double prefix = 0.0;
            for (std::size_t j = 0; j < w.length(); ++j) {
                double before = prefix;
                prefix += g.edge(w.edges[j]).cost;
                if (prefix > tau / 2.0 || j + 1 == w.length()) {
                    double ret = w.cost - prefix;
                    ok = before <= tau / 2.0 && ret <= tau / 2.0;
                    break;
                }
            }
            if (!ok) {
                detail = "trip of cost " + std::to_string(w.cost) + " has no valid split";
                return false;
            }
        }
    }
    detail = "all " + std::to_string(trips) + " round trips split within tau/2 on both sides";
    return true;
}

// ---------------------------------------------------------------------------
// 7. Degree-2 contraction preservation, literally pre/post on the same graph.

bool criterion7(std::string& detail) {
    Rng rng(70007);
    const double tau = 10.0;
    int failures = 0;
    std::string first_failure;
    for (int i = 0; i < 100; ++i) {
        testing::RandomGraphOptions opts;
        opts.min_nodes = 5;
        opts.max_nodes = 8;
        auto base = testing::random_graph(rng, opts);
        auto injected = testing::inject_chains(base, rng, 2, 2);
        const CostGainGraph& g = injected.graph;
        NodeId start = 0;  // base node, preserved below
        std::vector<NodeId> keep{start};
        auto contracted = contract_degree2(g, keep);
        NodeId cstart = *contracted.find_node(g.node_name(start));

        auto before = run_uni(g, make_query(start, tau, Mode::plain));
        auto after = run_uni(contracted, make_query(cstart, tau, Mode::plain));
        if (!testing::same_labels(before, after)) {
            ++failures;
            if (first_failure.empty())
                first_failure = "graph " + std::to_string(i) + ": pre " +
                                testing::describe_labels(before) + " vs post " +
                                testing::describe_labels(after);
        }
    }
    if (failures > 0) {
        detail = std::to_string(failures) +
                 "/100 graphs changed their front under contraction; first: " + first_failure +
                 " (trips that turn around inside a chain, or cheap partial-chain trips, have "
                 "no counterpart once the chain is one merged edge)";
        return false;
    }
    detail = "fronts identical pre/post contraction on 100 chain-injected graphs";
    return true;
}

// ---------------------------------------------------------------------------
// 8. RC no-pruning claim: k <= 2 with positive gains never fires dominates_rc.

bool criterion8(std::string& detail) {
    Rng rng(80008);
    const double tau = 8.0;
    std::uint64_t fired[3] = {0, 0, 0};  // index by k
    std::string example;
    for (int i = 0; i < 40; ++i) {
        testing::RandomGraphOptions opts;
        opts.min_nodes = 5;
        opts.max_nodes = 8;
        opts.min_gain = 1;  // all gains positive
        auto g = testing::random_graph(rng, opts);
        for (std::uint32_t k : {1u, 2u}) {
            auto ways = testing::enumerate_ways(g, 0, tau, k);
            // group by end node
            std::vector<std::vector<const Way*>> by_end(g.node_count());
            for (const Way& w : ways) by_end[w.end].push_back(&w);
            for (const auto& group : by_end) {
                for (const Way* a : group) {
                    for (const Way* b : group) {
                        if (a == b || a->edges == b->edges) continue;
                        if (dominates_rc({a->cost, a->gain_rc}, a->edge_set,
                                         {b->cost, b->gain_rc}, b->edge_set)) {
                            ++fired[k];
                            if (example.empty() && k == 2) {
                                std::ostringstream os;
                                os << "k=2: (" << a->cost << "," << a->gain_rc << ") with "
                                   << a->length() << " edges dominates (" << b->cost << ","
                                   << b->gain_rc << ") with " << b->length()
                                   << " edges (same edge set, extra laps)";
                                example = os.str();
                            }
                        }
                    }
                }
            }
        }
    }
    if (fired[1] != 0 || fired[2] != 0) {
        detail = "dominates_rc fired " + std::to_string(fired[1]) + " times at k=1 and " +
                 std::to_string(fired[2]) + " times at k=2; " + example;
        return false;
    }
    detail = "no firing across exhaustive enumeration at k=1 and k=2";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "oracle equivalence", criterion1},
        {2, "fixture regression", criterion2},
        {3, "pruning soundness ablation", criterion3},
        {4, "bidirectional search-space reduction", criterion4},
        {5, "visited-node growth", criterion5},
        {6, "split completeness", criterion6},
        {7, "degree-2 contraction preservation", criterion7},
        {8, "rc no-pruning theorem check", criterion8},
    };

    int failures = 0;
    int ran = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d %s: %s (%.1fs) - %s\n", c.id, ok ? "PASS" : "FAIL", c.name,
                    secs, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
        ++ran;
    }
    std::printf("acceptance: %d/%d criteria passed\n", ran - failures, ran);
    return failures;
}
