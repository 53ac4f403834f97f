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

struct MultConfig {
    double p = 0.5;
    double eps = 0.9;
    std::uint64_t seed = 1;
};

// (2+eps)-approximate decremental distances.
//
// Two heap layers sit on top of the bunch engine:
//   neighbor heap (x, v): entries y adjacent to x with y in B(v), keyed by w~(x,y) + d~_B(v,y)
//   adjacent heap (u, v): entries x in B(u) whose neighbor heap (x, v) is nonempty, keyed by
//                         d~_B(u,x) + rounded min of neighbor heap (x, v)
// Every heap entry is re-derived from current state whenever one of its inputs changes, and
// reverse indices record where entries live so stale ones are found after a membership loss.
class ApspMult final : public DecrementalApsp {
  public:
    ApspMult(DynamicGraph g, const MultConfig& cfg);
    ApspMult(DynamicGraph g, const MultConfig& cfg, PivotSample sample);

    std::string name() const override { return "mult"; }
    const DynamicGraph& graph() const override { return graph_; }
    void apply(const UpdateEvent& e) override;
    Estimate query(NodeId u, NodeId v) const override;
    Counters counters() const override;

    const BunchEngine& bunches() const { return bunches_; }
    const MultConfig& config() const { return cfg_; }

    // Rounded minimum of neighbor heap (x, v), +inf when empty.
    double neighbor_min(NodeId x, NodeId v) const;
    std::size_t neighbor_heap_size(NodeId x, NodeId v) const;
    std::size_t adjacent_heap_size(NodeId u, NodeId v) const;
    std::size_t live_neighbor_heaps() const { return nbr_.size(); }
    std::size_t live_adjacent_heaps() const { return adj_.size(); }
    std::uint32_t max_neighbor_min_changes() const { return max_min_changes_; }
    // Entries of neighbor heap (x, v) as (member, key), sorted by member.
    std::vector<std::pair<NodeId, double>> neighbor_entries(NodeId x, NodeId v) const;
    // Entries of adjacent heap (u, v) as (bunch member, key), sorted by member.
    std::vector<std::pair<NodeId, double>> adjacent_entries(NodeId u, NodeId v) const;

    // Recomputes both heap layers from scratch and throws std::logic_error on any mismatch.
    void check_invariants() const;

  private:
    struct NbrHeap {
        IndexedMinHeap<double> heap;
        double rounded_min = kEstimateInfinity;
    };

    void build();
    double edge_rounded(NodeId x, NodeId y) const;
    void sync_neighbor(NodeId x, NodeId v, NodeId y);
    void sync_adjacent(NodeId u, NodeId v, NodeId x);
    void propagate_min(NodeId x, NodeId v);

    MultConfig cfg_;
    DynamicGraph graph_;
    BunchEngine bunches_;

    std::unordered_map<std::uint64_t, NbrHeap> nbr_;                            // (x, v)
    std::unordered_map<std::uint64_t, std::unordered_set<NodeId>> nbr_by_edge_;   // (x, y) -> v
    std::unordered_map<std::uint64_t, std::unordered_set<NodeId>> nbr_by_member_; // (y, v) -> x
    std::vector<std::unordered_set<NodeId>> nbr_targets_;                        // x -> v with nonempty heap

    std::unordered_map<std::uint64_t, IndexedMinHeap<double>> adj_;               // (u, v)
    std::unordered_map<std::uint64_t, std::unordered_set<NodeId>> adj_by_bunch_;  // (u, x) -> v
    std::unordered_map<std::uint64_t, std::unordered_set<NodeId>> adj_by_heap_;   // (x, v) -> u

    // First-touch snapshot of rounded minima within the current update.
    std::unordered_map<std::uint64_t, double> min_before_;
    std::unordered_map<std::uint64_t, std::uint32_t> min_changes_;
    std::uint32_t max_min_changes_ = 0;
    std::int64_t min_change_total_ = 0;
    std::int64_t heap_touches_ = 0;
    std::int64_t bunch_events_ = 0;
};

} // namespace decapsp
