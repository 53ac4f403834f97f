// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "decapsp/graph.hpp"
#include "decapsp/rounding.hpp"
#include "decapsp/source_forest.hpp"

namespace decapsp {

struct PivotSample {
    std::vector<char> in_set;
    std::vector<NodeId> members;
};

// Each node joins independently with probability p. Throws DomainError unless 0 < p <= 1.
PivotSample sample_pivots(NodeId n, double p, std::uint64_t seed);

struct BunchMember {
    Weight distance;  // exact distance from the bunch owner
    double rounded;   // distance rounded up to a power of (1 + eps/3); 0 for the owner itself
};

struct BunchEvent {
    enum class Kind { Leave, DistanceIncrease, Join };

    Kind kind;
    NodeId owner;
    NodeId member;
    double rounded; // new rounded distance, +inf on Leave
};

const char* to_string(BunchEvent::Kind kind);

struct BunchConfig {
    double p = 0.5;
    double eps = 0.9;
    std::uint64_t seed = 1;
};

// Sampled pivot set A, nearest pivots, and lazily rebuilt bunches.
//
// B(v) = { w : d(v,w) < r(v) } where r(v) is the pivot distance at the last rebuild. A rebuild
// happens only when the current pivot distance exceeds (1 + eps/3) r(v), so between rebuilds
// bunches only shrink and member distances only grow. Pivot distances come from one exact
// tree per node of A.
class BunchEngine {
  public:
    BunchEngine(const DynamicGraph& g, const BunchConfig& cfg);
    BunchEngine(const DynamicGraph& g, const BunchConfig& cfg, PivotSample sample);

    // Call once per update, after the graph has changed. Returns the membership and rounded
    // distance changes in (owner, member) order; engine state already reflects them.
    std::vector<BunchEvent> refresh(const DynamicGraph& g, const ChangeRecord& change);

    NodeId node_count() const { return static_cast<NodeId>(pivot_.size()); }
    const GeometricRounder& rounder() const { return rounder_; }
    Ratio radius_slack() const { return slack_; }

    bool in_pivot_set(NodeId v) const { return sample_.in_set[static_cast<std::size_t>(v)] != 0; }
    const std::vector<NodeId>& pivot_set() const { return sample_.members; }
    // Nearest node of A (smallest id on ties), -1 when none is reachable.
    NodeId pivot(NodeId v) const { return pivot_[static_cast<std::size_t>(v)]; }
    Weight pivot_distance(NodeId v) const { return pivot_distance_[static_cast<std::size_t>(v)]; }
    Weight radius(NodeId v) const { return radius_[static_cast<std::size_t>(v)]; }
    Weight pivot_set_distance(NodeId s, NodeId v) const { return sources_.distance(s, v); }
    const SourceForest& pivot_trees() const { return sources_; }

    const std::unordered_map<NodeId, BunchMember>& bunch(NodeId v) const {
        return bunch_[static_cast<std::size_t>(v)];
    }
    bool in_bunch(NodeId v, NodeId w) const { return bunch(v).contains(w); }
    // Rounded distance from v to w if w is in B(v), +inf otherwise.
    double bunch_rounded(NodeId v, NodeId w) const;
    const std::unordered_set<NodeId>& cluster(NodeId u) const { return cluster_[static_cast<std::size_t>(u)]; }

    std::size_t rebuilds(NodeId v) const { return rebuilds_[static_cast<std::size_t>(v)]; }
    std::size_t max_rebuilds() const;
    std::size_t total_rebuilds() const;
    // Sum over v of the number of distinct nodes ever in B(v).
    std::size_t bunch_load() const;
    std::size_t a_level_increases() const { return sources_.level_increases(); }

  private:
    void recompute_pivot(NodeId v);
    std::unordered_map<NodeId, BunchMember> scan_bunch(const DynamicGraph& g, NodeId v, Weight radius) const;
    void install(NodeId v, std::unordered_map<NodeId, BunchMember> next, std::vector<BunchEvent>& events);

    PivotSample sample_;
    Ratio slack_;
    GeometricRounder rounder_;
    SourceForest sources_;
    std::vector<NodeId> pivot_;
    std::vector<Weight> pivot_distance_;
    std::vector<Weight> radius_;
    std::vector<std::unordered_map<NodeId, BunchMember>> bunch_;
    std::vector<std::unordered_set<NodeId>> cluster_;
    std::vector<std::unordered_set<NodeId>> ever_;
    std::vector<std::size_t> rebuilds_;
};

} // namespace decapsp
