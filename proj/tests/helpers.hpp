// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "decapsp/graph.hpp"
#include "decapsp/workload.hpp"

namespace decapsp::testing {

inline DynamicGraph path_graph(NodeId n, Weight w = 1) {
    DynamicGraph g(n, w);
    for (NodeId v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1, w);
    }
    return g;
}

inline DynamicGraph complete_graph(NodeId n, Weight w = 1) {
    DynamicGraph g(n, w);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            g.add_edge(u, v, w);
        }
    }
    return g;
}

inline DynamicGraph star_graph(NodeId leaves) {
    DynamicGraph g(leaves + 1, 1);
    for (NodeId v = 1; v <= leaves; ++v) {
        g.add_edge(0, v, 1);
    }
    return g;
}

inline Workload workload(NodeId n, double density, Weight w, std::uint64_t seed, double fraction = 1.0) {
    WorkloadConfig cfg;
    cfg.n = n;
    cfg.density = density;
    cfg.max_weight = w;
    cfg.seed = seed;
    cfg.deletion_fraction = fraction;
    cfg.checkpoint_every = 1;
    return generate_workload(cfg);
}

inline std::vector<UpdateEvent> updates_of(const std::vector<StreamItem>& stream) {
    std::vector<UpdateEvent> out;
    for (const auto& item : stream) {
        if (!item.is_query) {
            out.push_back(item.update);
        }
    }
    return out;
}

} // namespace decapsp::testing
