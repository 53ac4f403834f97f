// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/source_forest.hpp"

namespace decapsp {

void SourceForest::add_source(const DynamicGraph& g, NodeId s) {
    if (trees_.contains(s)) {
        return;
    }
    trees_.emplace(s, MonotoneESTree(g, s, depth_cap_));
    order_.push_back(s);
}

std::vector<SourceForest::Change> SourceForest::apply(const ChangeRecord& change) {
    std::vector<Change> out;
    for (auto& [s, tree] : trees_) {
        auto raised = tree.apply(change);
        if (!raised.empty()) {
            out.push_back({s, std::move(raised)});
        }
    }
    return out;
}

std::size_t SourceForest::level_increases() const {
    std::size_t total = 0;
    for (const auto& [_, tree] : trees_) {
        total += tree.level_increases();
    }
    return total;
}

} // namespace decapsp
