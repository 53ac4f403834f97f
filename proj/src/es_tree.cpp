// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/es_tree.hpp"

#include <algorithm>
#include <queue>

namespace decapsp {

MonotoneESTree::MonotoneESTree(const DynamicGraph& g, NodeId root, Weight depth_cap)
    : MonotoneESTree(g.node_count(), g.edges(), root, depth_cap) {}

MonotoneESTree::MonotoneESTree(NodeId n, const std::vector<Edge>& edges, NodeId root, Weight depth_cap)
    : root_(root), depth_cap_(depth_cap), adj_(static_cast<std::size_t>(n)), nbr_heap_(static_cast<std::size_t>(n)),
      level_(static_cast<std::size_t>(n), kInfinity) {
    if (depth_cap < 0) {
        throw DomainError("depth cap must be nonnegative");
    }
    check_node(root);
    for (const auto& e : edges) {
        check_node(e.u);
        check_node(e.v);
        if (e.u == e.v || adj_[static_cast<std::size_t>(e.u)].contains(e.v)) {
            throw DuplicateEdge(e.u, e.v);
        }
        adj_[static_cast<std::size_t>(e.u)].emplace(e.v, e.w);
        adj_[static_cast<std::size_t>(e.v)].emplace(e.u, e.w);
    }
    build();
}

void MonotoneESTree::check_node(NodeId u) const {
    if (u < 0 || u >= node_count()) {
        throw DomainError("node id " + std::to_string(u) + " out of range");
    }
}

void MonotoneESTree::build() {
    using Item = std::pair<Weight, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    level_[static_cast<std::size_t>(root_)] = 0;
    pq.emplace(0, root_);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != level_[static_cast<std::size_t>(u)]) {
            continue;
        }
        for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)]) {
            const Weight nd = d + w;
            if (nd <= depth_cap_ && nd < level_[static_cast<std::size_t>(v)]) {
                level_[static_cast<std::size_t>(v)] = nd;
                pq.emplace(nd, v);
            }
        }
    }
    for (NodeId u = 0; u < node_count(); ++u) {
        for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)]) {
            nbr_heap_[static_cast<std::size_t>(u)].upsert(v, saturating_add(level_[static_cast<std::size_t>(v)], w));
        }
    }
}

NodeId MonotoneESTree::parent(NodeId v) const {
    const auto& h = nbr_heap_.at(static_cast<std::size_t>(v));
    if (v == root_ || level(v) >= kInfinity || h.empty()) {
        return -1;
    }
    return h.top().id;
}

bool MonotoneESTree::has_edge(NodeId u, NodeId v) const {
    if (u < 0 || u >= node_count()) {
        return false;
    }
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

Weight MonotoneESTree::edge_weight(NodeId u, NodeId v) const {
    if (!has_edge(u, v)) {
        return kInfinity;
    }
    return adj_[static_cast<std::size_t>(u)].at(v);
}

void MonotoneESTree::set_heap_keys(NodeId u, NodeId v, Weight w) {
    nbr_heap_[static_cast<std::size_t>(u)].upsert(v, saturating_add(level_[static_cast<std::size_t>(v)], w));
    nbr_heap_[static_cast<std::size_t>(v)].upsert(u, saturating_add(level_[static_cast<std::size_t>(u)], w));
}

void MonotoneESTree::mark_dirty(NodeId u) {
    if (u != root_ && !dirty_.contains(u)) {
        dirty_.upsert(u, level_[static_cast<std::size_t>(u)]);
    }
}

std::vector<NodeId> MonotoneESTree::delete_edge(NodeId u, NodeId v) {
    if (!has_edge(u, v)) {
        throw EdgeNotFound(u, v);
    }
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
    nbr_heap_[static_cast<std::size_t>(u)].erase(v);
    nbr_heap_[static_cast<std::size_t>(v)].erase(u);
    mark_dirty(u);
    mark_dirty(v);
    return update_levels();
}

std::vector<NodeId> MonotoneESTree::increase_weight(NodeId u, NodeId v, Weight w) {
    if (!has_edge(u, v)) {
        throw EdgeNotFound(u, v);
    }
    if (w >= kInfinity) {
        return delete_edge(u, v);
    }
    if (w < adj_[static_cast<std::size_t>(u)].at(v)) {
        throw MonotonicityViolation("increase_weight called with a smaller weight");
    }
    adj_[static_cast<std::size_t>(u)][v] = w;
    adj_[static_cast<std::size_t>(v)][u] = w;
    set_heap_keys(u, v, w);
    mark_dirty(u);
    mark_dirty(v);
    return update_levels();
}

std::vector<NodeId> MonotoneESTree::apply(const ChangeRecord& change) {
    if (change.deleted()) {
        return delete_edge(change.u, change.v);
    }
    return increase_weight(change.u, change.v, change.new_weight);
}

void MonotoneESTree::insert_edge(NodeId u, NodeId v, Weight w) {
    check_node(u);
    check_node(v);
    if (u == v || has_edge(u, v)) {
        throw DuplicateEdge(u, v);
    }
    adj_[static_cast<std::size_t>(u)].emplace(v, w);
    adj_[static_cast<std::size_t>(v)].emplace(u, w);
    set_heap_keys(u, v, w);
}

void MonotoneESTree::lower_weight(NodeId u, NodeId v, Weight w) {
    if (!has_edge(u, v)) {
        throw EdgeNotFound(u, v);
    }
    if (w > adj_[static_cast<std::size_t>(u)].at(v)) {
        throw MonotonicityViolation("lower_weight called with a larger weight");
    }
    adj_[static_cast<std::size_t>(u)][v] = w;
    adj_[static_cast<std::size_t>(v)][u] = w;
    set_heap_keys(u, v, w);
}

std::vector<NodeId> MonotoneESTree::update_levels() {
    std::vector<NodeId> raised;
    while (!dirty_.empty()) {
        const NodeId u = dirty_.pop().id;
        const auto& heap = nbr_heap_[static_cast<std::size_t>(u)];
        Weight candidate = heap.empty() ? kInfinity : heap.top().key;
        if (candidate > depth_cap_) {
            candidate = kInfinity;
        }
        Weight& lu = level_[static_cast<std::size_t>(u)];
        if (candidate <= lu) {
            continue;
        }
        lu = candidate;
        ++level_increases_;
        raised.push_back(u);
        for (const auto& [x, w] : adj_[static_cast<std::size_t>(u)]) {
            nbr_heap_[static_cast<std::size_t>(x)].upsert(u, saturating_add(lu, w));
            mark_dirty(x);
        }
    }
    std::sort(raised.begin(), raised.end());
    raised.erase(std::unique(raised.begin(), raised.end()), raised.end());
    return raised;
}

} // namespace decapsp
