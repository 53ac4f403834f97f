// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decapsp/algorithm.hpp"
#include "decapsp/es_tree.hpp"

namespace decapsp {

// Partition of V into levels 1..k. Levels below k are sampled with probability
// c ln n / s_i where s_i = (m/n)^(1 - i/k) (ln n)^(i/k); a node sampled at several levels keeps
// the lowest, and level k takes everything left over.
class HittingHierarchy {
  public:
    HittingHierarchy(NodeId n, std::size_t m, int k, double c, std::uint64_t seed);

    int k() const { return k_; }
    // s_i for 1 <= i < k; s_0 is m/n.
    double threshold(int i) const;
    double probability(int i) const;
    int level(NodeId v) const { return level_[static_cast<std::size_t>(v)]; }
    const std::vector<NodeId>& members(int i) const { return members_.at(static_cast<std::size_t>(i)); }

  private:
    int k_;
    double n_;
    double m_;
    double c_;
    std::vector<int> level_;
    std::vector<std::vector<NodeId>> members_; // index 0 unused
};

using NodePair = std::pair<NodeId, NodeId>;

// Per-node index i_v, the star edge set (one edge per node into level i_v) and the level edge
// sets E_i = { {a,b} : max(i_a, i_b) >= i }. Both only grow while their edges stay live.
class EdgeSets {
  public:
    EdgeSets(const DynamicGraph& g, const HittingHierarchy& h);

    // Lowest level among v's live neighbors; k+1 once v is isolated.
    int index(NodeId v) const { return index_[static_cast<std::size_t>(v)]; }
    NodeId star_partner(NodeId v) const { return star_[static_cast<std::size_t>(v)]; }
    bool in_star(NodeId a, NodeId b) const { return star_partner(a) == b || star_partner(b) == a; }
    bool in_level_set(NodeId a, NodeId b, int i) const { return std::max(index(a), index(b)) >= i; }

    struct Delta {
        std::vector<NodePair> star_added;
        std::vector<std::vector<NodePair>> level_added; // by level, 2..k
    };
    // Call after {a, b} has been removed from g.
    Delta on_delete(const DynamicGraph& g, NodeId a, NodeId b);

    std::size_t star_additions() const { return star_additions_; }
    // Edges ever placed in E_i, including the initial ones.
    std::size_t level_additions(int i) const { return level_additions_.at(static_cast<std::size_t>(i)); }

  private:
    bool pick_star(const DynamicGraph& g, NodeId v, std::size_t from);

    const HittingHierarchy* h_;
    std::vector<std::vector<NodeId>> scan_order_;
    std::vector<std::size_t> cursor_;
    std::vector<int> index_;
    std::vector<NodeId> star_;
    std::size_t star_additions_ = 0;
    std::vector<std::size_t> level_additions_;
};

struct AdditiveConfig {
    int k = 2;
    Weight d = 4;
    double c = 2.0;
    std::uint64_t seed = 1;
};

// Distances within d on unweighted graphs with additive error 2(k-1).
//
// Every node roots a tree. Level-1 roots keep exact trees on G. A root u at level i >= 2 keeps a
// monotone tree on E_i, the star edges, and one export edge {u,v} per lower-level root v
// weighted by v's level of u. Trees are refreshed level by level so exports are final before a
// higher level consumes them. All depth caps are d + 3k.
class AdditiveApsp final : public DecrementalApsp {
  public:
    AdditiveApsp(DynamicGraph g, const AdditiveConfig& cfg);

    std::string name() const override { return "additive"; }
    const DynamicGraph& graph() const override { return graph_; }
    void apply(const UpdateEvent& e) override;
    Estimate query(NodeId u, NodeId v) const override;
    Counters counters() const override;

    const HittingHierarchy& hierarchy() const { return hierarchy_; }
    const EdgeSets& edge_sets() const { return sets_; }
    const MonotoneESTree& tree(NodeId root) const { return *trees_.at(static_cast<std::size_t>(root)); }
    Weight depth_cap() const { return cap_; }

    // Is the unweighted edge {a,b} part of root's tree graph (as opposed to only an export edge)?
    bool has_real_edge(NodeId root, NodeId a, NodeId b) const;
    // Throws std::logic_error unless every tree holds exactly the live edges of E_i and the star
    // set, and every node either has a star edge to a lower level or keeps all its edges.
    void check_structure() const;

  private:
    struct RootSlot {
        bool real = false;
        Weight exported = kInfinity;
    };

    void add_real(NodeId root, NodeId a, NodeId b);
    std::vector<NodeId> remove_real(NodeId root, NodeId a, NodeId b);
    std::vector<NodeId> sync_slot(NodeId root, NodeId other);
    void export_levels(NodeId root, const std::vector<NodeId>& raised);

    AdditiveConfig cfg_;
    DynamicGraph graph_;
    HittingHierarchy hierarchy_;
    EdgeSets sets_;
    Weight cap_;
    std::vector<std::unique_ptr<MonotoneESTree>> trees_;
    std::vector<std::unordered_map<NodeId, RootSlot>> slots_;
    std::vector<std::unordered_map<NodeId, Weight>> pending_; // root -> lower root -> new weight
    std::int64_t export_updates_ = 0;
};

} // namespace decapsp
