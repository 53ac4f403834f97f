// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "decapsp/apsp_mult.hpp"
#include "decapsp/oracle.hpp"
#include "helpers.hpp"

using namespace decapsp;

namespace {

// Min-plus closure over at most `hops` edges, computed by repeated products.
DistanceMatrix min_plus_hops(const DynamicGraph& g, int hops) {
    const NodeId n = g.node_count();
    DistanceMatrix step(n, kInfinity);
    for (NodeId u = 0; u < n; ++u) {
        step.at(u, u) = 0;
        for (const auto& [v, w] : g.neighbors(u)) {
            step.at(u, v) = w;
        }
    }
    DistanceMatrix acc = step;
    for (int h = 1; h < hops; ++h) {
        DistanceMatrix next(n, kInfinity);
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId x = 0; x < n; ++x) {
                if (acc.at(u, x) >= kInfinity) {
                    continue;
                }
                for (NodeId v = 0; v < n; ++v) {
                    next.at(u, v) = std::min(next.at(u, v), saturating_add(acc.at(u, x), step.at(x, v)));
                }
            }
        }
        acc = next;
    }
    return acc;
}

} // namespace

TEST_CASE("K3 and P4 distances") {
    const auto k3 = exact_apsp(testing::complete_graph(3));
    for (NodeId u = 0; u < 3; ++u) {
        for (NodeId v = 0; v < 3; ++v) {
            CHECK(k3.at(u, v) == (u == v ? 0 : 1));
        }
    }
    CHECK(exact_apsp(testing::path_graph(4)).at(0, 3) == 3);
    DynamicGraph g(3, 1);
    g.add_edge(0, 1, 1);
    CHECK(exact_apsp(g).at(0, 2) == kInfinity);
}

TEST_CASE("exact distances agree with min-plus products up to four hops") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto w = testing::workload(64, 0.2, 1, seed);
        const auto d = exact_apsp(w.graph);
        const auto mp = min_plus_hops(w.graph, 4);
        for (NodeId u = 0; u < 64; ++u) {
            for (NodeId v = 0; v < 64; ++v) {
                if (d.at(u, v) <= 4) {
                    CHECK(mp.at(u, v) == d.at(u, v));
                } else {
                    CHECK(mp.at(u, v) == kInfinity);
                }
            }
        }
    }
    const auto w = testing::workload(40, 0.2, 7, 9);
    const auto d = exact_apsp(w.graph);
    const auto mp = min_plus_hops(w.graph, 39);
    for (NodeId u = 0; u < 40; ++u) {
        for (NodeId v = 0; v < 40; ++v) {
            CHECK(mp.at(u, v) == d.at(u, v));
        }
    }
}

TEST_CASE("exact matrices satisfy the triangle inequality") {
    const auto w = testing::workload(40, 0.15, 9, 2);
    const auto d = exact_apsp(w.graph);
    for (NodeId a = 0; a < 40; ++a) {
        for (NodeId b = 0; b < 40; ++b) {
            CHECK(d.at(a, b) == d.at(b, a));
            for (NodeId c = 0; c < 40; ++c) {
                CHECK(d.at(a, c) <= saturating_add(d.at(a, b), d.at(b, c)));
            }
        }
    }
}

TEST_CASE("oracle refuses graphs above the cap") {
    setenv("DECAPSP_ORACLE_CAP", "4", 1);
    CHECK(oracle_cap() == 4);
    CHECK_THROWS_AS(exact_apsp(testing::path_graph(5)), OracleTooLarge);
    CHECK_NOTHROW(exact_apsp(testing::path_graph(4)));
    unsetenv("DECAPSP_ORACLE_CAP");
    CHECK(oracle_cap() == 512);
}

TEST_CASE("bottleneck takes the heaviest edge over all shortest paths") {
    DynamicGraph g(4, 3);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 2);
    g.add_edge(0, 3, 3);
    g.add_edge(3, 2, 1);
    const auto b = bottleneck_weights(g);
    CHECK(b.at(0, 2) == 3);
    CHECK(b.at(2, 0) == 3);
    CHECK(b.at(0, 0) == 0);
    DynamicGraph path(3, 5);
    path.add_edge(0, 1, 5);
    path.add_edge(1, 2, 2);
    CHECK(bottleneck_weights(path).at(0, 2) == 5);
    const auto u = bottleneck_weights(testing::workload(20, 0.3, 1, 1).graph);
    const auto d = exact_apsp(testing::workload(20, 0.3, 1, 1).graph);
    for (NodeId x = 0; x < 20; ++x) {
        for (NodeId y = 0; y < 20; ++y) {
            CHECK(u.at(x, y) == (x != y && d.at(x, y) < kInfinity ? 1 : 0));
        }
    }
}

TEST_CASE("bottleneck stays between the lightest path edge and W") {
    const auto w = testing::workload(30, 0.2, 8, 4);
    const auto b = bottleneck_weights(w.graph);
    const auto d = exact_apsp(w.graph);
    for (NodeId x = 0; x < 30; ++x) {
        for (NodeId y = 0; y < 30; ++y) {
            if (x == y || d.at(x, y) >= kInfinity) {
                continue;
            }
            CHECK(b.at(x, y) <= 8);
            CHECK(b.at(x, y) >= 1);
            CHECK(b.at(x, y) <= d.at(x, y));
        }
    }
}

TEST_CASE("static 2-approximation") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto k3 = static_two_apsp(testing::complete_graph(3), 0.5, seed);
        for (NodeId u = 0; u < 3; ++u) {
            for (NodeId v = 0; v < 3; ++v) {
                if (u != v) {
                    CHECK((k3.at(u, v) == 1.0 || k3.at(u, v) == 2.0));
                }
            }
        }
    }
    const auto w = testing::workload(30, 0.2, 6, 3);
    const auto exact = exact_apsp(w.graph);
    const auto all = static_two_apsp(w.graph, 1.0, 1);
    for (NodeId u = 0; u < 30; ++u) {
        for (NodeId v = 0; v < 30; ++v) {
            CHECK(all.at(u, v) == to_estimate(exact.at(u, v)));
        }
    }
    StaticTwoApsp algo(w.graph, 0.3, 2);
    CHECK(sweep(algo, w.stream, BoundSpec::multiplicative(2.0), {true}).pass());
}

TEST_CASE("a single corrupted estimate produces exactly one violation") {
    const auto w = testing::workload(20, 0.3, 3, 6);
    SweepOptions opts;
    opts.dense = true;
    opts.perturb = [](std::size_t version, NodeId u, NodeId v, Estimate est) {
        return version == 5 && u == 2 && v == 7 ? est * 10.0 + 100.0 : est;
    };
    ApspMult a(w.graph, {0.3, 0.9, 1});
    const auto report = sweep(a, w.stream, BoundSpec::multiplicative(2.9), opts);
    CHECK(report.total_violations == 1);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].version == 5);
    CHECK(report.violations[0].u == 2);
    CHECK(report.violations[0].v == 7);
    CHECK_FALSE(report.pass());

    SweepOptions low;
    low.dense = true;
    low.perturb = [](std::size_t version, NodeId u, NodeId v, Estimate est) {
        return version == 0 && u == 0 && v == 1 ? 0.5 : est;
    };
    ApspMult b(w.graph, {0.3, 0.9, 1});
    CHECK(sweep(b, w.stream, BoundSpec::multiplicative(2.9), low).total_violations == 1);
}

TEST_CASE("sweeps are deterministic") {
    const auto w = testing::workload(24, 0.25, 10, 8);
    auto run = [&] {
        ApspMult a(w.graph, {0.2, 0.9, 4});
        return to_json(sweep(a, w.stream, BoundSpec::multiplicative(2.9), {true})).dump();
    };
    CHECK(run() == run());
}

TEST_CASE("checkpoints follow query lines unless dense") {
    WorkloadConfig cfg;
    cfg.n = 16;
    cfg.density = 0.3;
    cfg.seed = 2;
    cfg.checkpoint_every = 4;
    const auto w = generate_workload(cfg);
    const auto queries = static_cast<std::size_t>(
        std::count_if(w.stream.begin(), w.stream.end(), [](const StreamItem& i) { return i.is_query; }));
    ApspMult a(w.graph, {0.3, 0.9, 1});
    CHECK(sweep(a, w.stream, BoundSpec::multiplicative(2.9)).checkpoints.size() == queries);
    ApspMult b(w.graph, {0.3, 0.9, 1});
    CHECK(sweep(b, w.stream, BoundSpec::multiplicative(2.9), {true}).checkpoints.size() ==
          w.graph.edge_count() + 1);
}
