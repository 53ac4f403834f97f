// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <unordered_map>
#include <vector>

#include "decapsp/graph.hpp"
#include "decapsp/indexed_heap.hpp"

namespace decapsp {

// Single-source distances to depth `depth_cap` under edge deletions, weight increases and
// insertions. Levels never decrease: an insertion or weight decrease that shortens a path is
// absorbed without touching any level. With deletions and increases only, every finite level
// equals the true distance.
class MonotoneESTree {
  public:
    MonotoneESTree(const DynamicGraph& g, NodeId root, Weight depth_cap);
    MonotoneESTree(NodeId n, const std::vector<Edge>& edges, NodeId root, Weight depth_cap);

    NodeId root() const { return root_; }
    Weight depth_cap() const { return depth_cap_; }
    NodeId node_count() const { return static_cast<NodeId>(level_.size()); }

    // kInfinity when the node is beyond the cap or unreachable.
    Weight level(NodeId v) const { return level_.at(static_cast<std::size_t>(v)); }
    const std::vector<Weight>& levels() const { return level_; }
    // Neighbor realizing the minimum level + weight, or -1 at the root and at infinite levels.
    NodeId parent(NodeId v) const;

    bool has_edge(NodeId u, NodeId v) const;
    Weight edge_weight(NodeId u, NodeId v) const; // kInfinity when absent
    const std::unordered_map<NodeId, Weight>& neighbors(NodeId u) const {
        return adj_.at(static_cast<std::size_t>(u));
    }

    // Each returns the sorted set of nodes whose level increased.
    std::vector<NodeId> delete_edge(NodeId u, NodeId v);
    std::vector<NodeId> increase_weight(NodeId u, NodeId v, Weight w);
    std::vector<NodeId> apply(const ChangeRecord& change);

    void insert_edge(NodeId u, NodeId v, Weight w);
    // Lowers an existing edge weight; handled like an insertion, so no level moves.
    void lower_weight(NodeId u, NodeId v, Weight w);

    std::size_t level_increases() const { return level_increases_; }

  private:
    void check_node(NodeId u) const;
    void build();
    void set_heap_keys(NodeId u, NodeId v, Weight w);
    void mark_dirty(NodeId u);
    std::vector<NodeId> update_levels();

    NodeId root_;
    Weight depth_cap_;
    std::vector<std::unordered_map<NodeId, Weight>> adj_;
    std::vector<IndexedMinHeap<Weight>> nbr_heap_;
    std::vector<Weight> level_;
    IndexedMinHeap<Weight> dirty_;
    std::size_t level_increases_ = 0;
};

} // namespace decapsp
