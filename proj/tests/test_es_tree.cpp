// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "decapsp/es_tree.hpp"
#include "helpers.hpp"
#include "properties.hpp"

using namespace decapsp;

namespace {
std::vector<Weight> levels(const MonotoneESTree& t) { return t.levels(); }
} // namespace

TEST_CASE("init gives shortest-path levels") {
    const MonotoneESTree t(testing::path_graph(4), 0, 10);
    CHECK(levels(t) == std::vector<Weight>{0, 1, 2, 3});
    CHECK(t.parent(0) == -1);
    CHECK(t.parent(3) == 2);
}

TEST_CASE("isolated node is infinite") {
    DynamicGraph g(3, 1);
    g.add_edge(0, 1, 1);
    const MonotoneESTree t(g, 0, 5);
    CHECK(t.level(2) == kInfinity);
}

TEST_CASE("star from the center with depth one") {
    const MonotoneESTree t(testing::star_graph(3), 0, 1);
    CHECK(levels(t) == std::vector<Weight>{0, 1, 1, 1});
}

TEST_CASE("depth cap turns far nodes infinite") {
    const MonotoneESTree t(testing::path_graph(5), 0, 2);
    CHECK(levels(t) == std::vector<Weight>{0, 1, 2, kInfinity, kInfinity});
}

TEST_CASE("deleting a path edge disconnects the tail") {
    MonotoneESTree t(testing::path_graph(4), 0, 10);
    const auto raised = t.delete_edge(1, 2);
    CHECK(raised == std::vector<NodeId>{2, 3});
    CHECK(t.level(2) == kInfinity);
    CHECK(t.level(3) == kInfinity);
    CHECK_THROWS_AS(t.delete_edge(1, 2), EdgeNotFound);
}

TEST_CASE("weight increase shifts downstream levels") {
    MonotoneESTree t(testing::path_graph(4), 0, 10);
    const auto raised = t.increase_weight(0, 1, 3);
    CHECK(levels(t) == std::vector<Weight>{0, 3, 4, 5});
    CHECK(raised == std::vector<NodeId>{1, 2, 3});
}

TEST_CASE("increase beyond the cap makes levels infinite") {
    MonotoneESTree t(testing::path_graph(4), 0, 4);
    t.increase_weight(1, 2, 4);
    CHECK(t.level(1) == 1);
    CHECK(t.level(2) == kInfinity);
    CHECK(t.level(3) == kInfinity);
}

TEST_CASE("insertions never lower a level") {
    MonotoneESTree t(testing::path_graph(3), 0, 10);
    t.insert_edge(0, 2, 1);
    CHECK(t.level(2) == 2);
    CHECK_THROWS_AS(t.insert_edge(0, 2, 1), DuplicateEdge);

    DynamicGraph g(4, 1);
    g.add_edge(0, 1, 1);
    MonotoneESTree u(g, 0, 10);
    u.insert_edge(2, 3, 1);
    CHECK(u.level(2) == kInfinity);
    CHECK(u.level(3) == kInfinity);
}

TEST_CASE("insert then increase never drops below the pre-insert level") {
    MonotoneESTree t(testing::path_graph(4), 0, 10);
    const auto before = t.levels();
    t.insert_edge(0, 3, 1);
    t.increase_weight(0, 3, 2);
    t.delete_edge(0, 3);
    for (NodeId v = 0; v < 4; ++v) {
        CHECK(t.level(v) >= before[static_cast<std::size_t>(v)]);
    }
    CHECK(t.levels() == before);
}

TEST_CASE("lowering a weight behaves like an insertion") {
    DynamicGraph g(3, 9);
    g.add_edge(0, 1, 5);
    g.add_edge(1, 2, 1);
    MonotoneESTree t(g, 0, 20);
    t.lower_weight(0, 1, 1);
    CHECK(t.level(1) == 5);
    t.increase_weight(1, 2, 3);
    CHECK(t.level(2) == 8);
    t.delete_edge(1, 2);
    CHECK(t.level(2) == kInfinity);
}

TEST_CASE("randomized interleavings keep levels monotone and sound") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto r = testing::es_tree_trial(seed, true);
        INFO("seed " << seed << ": " << r.failure);
        CHECK(r.ok);
    }
}

TEST_CASE("pure decremental trees stay exact") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto r = testing::es_tree_trial(seed, false);
        INFO("seed " << seed << ": " << r.failure);
        CHECK(r.ok);
    }
}

TEST_CASE("level increase events stay within n(L+1)") {
    const auto w = testing::workload(40, 0.2, 3, 9);
    MonotoneESTree t(w.graph, 0, 12);
    for (const auto& e : testing::updates_of(w.stream)) {
        t.delete_edge(e.u, e.v);
    }
    CHECK(t.level_increases() <= 40u * 13u);
}
