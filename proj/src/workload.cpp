// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/workload.hpp"

#include <algorithm>
#include <cmath>

namespace decapsp {

DynamicGraph random_graph(NodeId n, double density, Weight max_weight, std::mt19937_64& rng) {
    if (!(density > 0.0 && density <= 1.0)) {
        throw DomainError("density must lie in (0,1]");
    }
    if (max_weight < 1) {
        throw DomainError("maximum weight must be at least 1");
    }
    DynamicGraph g(n, max_weight);
    std::bernoulli_distribution coin(density);
    std::uniform_int_distribution<Weight> weight(1, max_weight);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                g.add_edge(u, v, weight(rng));
            }
        }
    }
    return g;
}

Workload generate_workload(const WorkloadConfig& cfg) {
    if (!(cfg.deletion_fraction >= 0.0 && cfg.deletion_fraction <= 1.0)) {
        throw DomainError("deletion fraction must lie in [0,1]");
    }
    std::mt19937_64 rng(cfg.seed);
    Workload w{random_graph(cfg.n, cfg.density, cfg.max_weight, rng), {}};
    auto order = w.graph.edges();
    std::shuffle(order.begin(), order.end(), rng);
    const auto count = static_cast<std::size_t>(std::llround(cfg.deletion_fraction * static_cast<double>(order.size())));
    std::uniform_int_distribution<NodeId> node(0, std::max<NodeId>(cfg.n - 1, 0));
    for (std::size_t i = 0; i < count; ++i) {
        StreamItem del;
        del.update = UpdateEvent::remove(order[i].u, order[i].v);
        w.stream.push_back(del);
        if (cfg.checkpoint_every > 0 && cfg.n >= 2 && (i + 1) % cfg.checkpoint_every == 0) {
            StreamItem q;
            q.is_query = true;
            q.qu = node(rng);
            do {
                q.qv = node(rng);
            } while (q.qv == q.qu);
            w.stream.push_back(q);
        }
    }
    return w;
}

void fit_weight_bound(DynamicGraph& g, const std::vector<StreamItem>& stream) {
    Weight bound = g.weight_bound();
    for (const auto& item : stream) {
        if (!item.is_query && !item.update.is_delete()) {
            bound = std::max(bound, item.update.new_weight);
        }
    }
    g.set_weight_bound(bound);
}

} // namespace decapsp
