// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace decapsp {

SubdividedGraph::SubdividedGraph(const DynamicGraph& g, int k) : k_(k), n_(g.node_count()) {
    if (k < 1) {
        throw DomainError("subdivision count must be at least 1");
    }
    if (!g.is_unweighted()) {
        throw DomainError("subdivision expects an unweighted graph");
    }
    chains_ = g.edges();
    live_.assign(chains_.size(), 1);
    const auto m = static_cast<std::int64_t>(chains_.size());
    expanded_ = DynamicGraph(static_cast<NodeId>(n_ + k * m), 1);
    for (std::size_t i = 0; i < chains_.size(); ++i) {
        ordinal_.emplace(unordered_pair_key(chains_[i].u, chains_[i].v), i);
        const auto path = chain(chains_[i].u, chains_[i].v);
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            expanded_.add_edge(path[j], path[j + 1], 1);
        }
    }
}

std::vector<NodeId> SubdividedGraph::chain(NodeId u, NodeId v) const {
    auto it = ordinal_.find(unordered_pair_key(u, v));
    if (it == ordinal_.end()) {
        throw EdgeNotFound(u, v);
    }
    const auto base = static_cast<NodeId>(n_ + static_cast<std::int64_t>(k_) * static_cast<std::int64_t>(it->second));
    std::vector<NodeId> path{std::min(u, v)};
    for (int j = 0; j < k_; ++j) {
        path.push_back(base + j);
    }
    path.push_back(std::max(u, v));
    if (u > v) {
        std::reverse(path.begin(), path.end());
    }
    return path;
}

std::vector<UpdateEvent> SubdividedGraph::translate_update(const UpdateEvent& e) {
    if (!e.is_delete()) {
        throw DomainError("the subdivided graph supports deletions only");
    }
    auto it = ordinal_.find(unordered_pair_key(e.u, e.v));
    if (it == ordinal_.end() || !live_[it->second]) {
        throw EdgeNotFound(e.u, e.v);
    }
    live_[it->second] = 0;
    const auto path = chain(e.u, e.v);
    std::vector<UpdateEvent> out;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        out.push_back(UpdateEvent::remove(path[j], path[j + 1]));
        expanded_.apply_update(out.back());
    }
    return out;
}

Estimate SubdividedGraph::translate_query(Estimate expanded_estimate, int k) {
    if (std::isinf(expanded_estimate)) {
        return expanded_estimate;
    }
    return std::floor(expanded_estimate / static_cast<double>(k + 1));
}

UnweightedMult::UnweightedMult(DynamicGraph g, const UnweightedMultConfig& cfg)
    : cfg_(cfg), graph_(std::move(g)), sub_(graph_, cfg.k) {
    MixedConfig inner;
    inner.p = cfg.p;
    inner.eps = cfg.eps;
    inner.seed = cfg.seed;
    inner.tau = cfg.tau > 0 ? cfg.tau
                            : std::max<std::int64_t>(
                                  1, static_cast<std::int64_t>(std::ceil(std::sqrt(
                                         static_cast<double>(sub_.graph().edge_count())))));
    inner_ = std::make_unique<ApspMixed>(sub_.graph(), inner);
}

void UnweightedMult::apply(const UpdateEvent& e) {
    if (!e.is_delete()) {
        throw DomainError("unweighted-mult supports deletions only");
    }
    if (!graph_.has_edge(e.u, e.v)) {
        throw EdgeNotFound(e.u, e.v);
    }
    const auto chain = sub_.translate_update(e);
    graph_.apply_update(e);
    for (const auto& step : chain) {
        inner_->apply(step);
    }
}

Estimate UnweightedMult::query(NodeId u, NodeId v) const {
    return SubdividedGraph::translate_query(inner_->query(u, v), sub_.k());
}

Counters UnweightedMult::counters() const {
    Counters c = inner_->counters();
    c["expanded_nodes"] = sub_.graph().node_count();
    c["expanded_edges"] = static_cast<std::int64_t>(sub_.graph().edge_count());
    return c;
}

} // namespace decapsp
