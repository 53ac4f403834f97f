// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "decapsp/algorithm.hpp"
#include "decapsp/bunches.hpp"
#include "decapsp/indexed_heap.hpp"

namespace decapsp {

struct MixedConfig {
    double p = 0.5;
    std::int64_t tau = 4;
    double eps = 0.9;
    std::uint64_t seed = 1;
};

// (2+eps, W_uv)-approximate decremental distances, where W_uv is the heaviest edge on a
// shortest u-v path.
//
// A node is heavy once it has been in at least tau bunches at some point; heavy nodes never
// turn light again and each gets an exact distance tree. Overlap heaps hold, per unordered pair,
// the light nodes common to both bunches.
class ApspMixed final : public DecrementalApsp {
  public:
    ApspMixed(DynamicGraph g, const MixedConfig& cfg);
    ApspMixed(DynamicGraph g, const MixedConfig& cfg, PivotSample sample);

    std::string name() const override { return "mixed"; }
    const DynamicGraph& graph() const override { return graph_; }
    void apply(const UpdateEvent& e) override;
    Estimate query(NodeId u, NodeId v) const override;
    Counters counters() const override;

    const BunchEngine& bunches() const { return bunches_; }
    const MixedConfig& config() const { return cfg_; }

    bool is_heavy(NodeId w) const { return heavy_since_[static_cast<std::size_t>(w)] >= 0; }
    // Graph version at which the node turned heavy, -1 while light.
    std::int64_t heavy_since(NodeId w) const { return heavy_since_[static_cast<std::size_t>(w)]; }
    const std::vector<NodeId>& heavy_nodes() const { return heavy_trees_.sources(); }
    // Nearest heavy node by exact distance (smallest id on ties), -1 when none is reachable.
    NodeId heavy_pivot(NodeId v) const;

    std::size_t overlap_heap_size(NodeId u, NodeId v) const;
    std::size_t live_overlap_heaps() const { return overlap_.size(); }
    std::size_t overlap_entries_for(NodeId w) const; // total entries naming w
    // Entries of the overlap heap for {u, v} as (common member, key), sorted by member.
    std::vector<std::pair<NodeId, double>> overlap_entries(NodeId u, NodeId v) const;

    // Recomputes heavy pivots and overlap heaps from scratch; throws std::logic_error on mismatch.
    void check_invariants() const;

  private:
    void promote(NodeId w);
    void sync_overlap(NodeId u, NodeId v, NodeId w);
    void sync_member(NodeId owner, NodeId w);

    MixedConfig cfg_;
    DynamicGraph graph_;
    BunchEngine bunches_;
    SourceForest heavy_trees_;
    std::vector<std::int64_t> heavy_since_;
    std::vector<IndexedMinHeap<Weight>> heavy_pivot_; // per node: heavy s keyed by exact distance

    std::unordered_map<std::uint64_t, IndexedMinHeap<double>> overlap_;             // unordered (u, v)
    std::unordered_map<std::uint64_t, std::unordered_set<NodeId>> overlap_index_;   // (w, u) -> v

    std::int64_t promotions_ = 0;
    std::int64_t heap_touches_ = 0;
    std::int64_t bunch_events_ = 0;
};

} // namespace decapsp
