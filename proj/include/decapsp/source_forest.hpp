// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "decapsp/es_tree.hpp"

namespace decapsp {

// One exact decremental tree per source; sources may be added over time and are never removed.
class SourceForest {
  public:
    explicit SourceForest(Weight depth_cap) : depth_cap_(depth_cap) {}

    // Builds the tree on the graph as it is now.
    void add_source(const DynamicGraph& g, NodeId s);
    bool is_source(NodeId s) const { return trees_.contains(s); }
    const std::vector<NodeId>& sources() const { return order_; }
    std::size_t size() const { return order_.size(); }

    Weight distance(NodeId s, NodeId v) const { return trees_.at(s).level(v); }
    const MonotoneESTree& tree(NodeId s) const { return trees_.at(s); }

    struct Change {
        NodeId source;
        std::vector<NodeId> raised;
    };
    // Sources whose tree changed, with the nodes that moved away.
    std::vector<Change> apply(const ChangeRecord& change);

    std::size_t level_increases() const;

  private:
    Weight depth_cap_;
    std::map<NodeId, MonotoneESTree> trees_;
    std::vector<NodeId> order_;
};

} // namespace decapsp
