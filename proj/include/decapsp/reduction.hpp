// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "decapsp/algorithm.hpp"
#include "decapsp/apsp_mixed.hpp"

namespace decapsp {

// Replaces every edge of an unweighted graph by a chain of k+1 unit edges through k fresh nodes.
// Original ids are kept; the j-th fresh node of the edge with ordinal i is n + k*i + j, where
// ordinals follow the sorted edge list at construction.
class SubdividedGraph {
  public:
    SubdividedGraph(const DynamicGraph& g, int k);

    int k() const { return k_; }
    NodeId original_nodes() const { return n_; }
    std::size_t original_edges() const { return chains_.size(); }
    const DynamicGraph& graph() const { return expanded_; }

    // Node ids along the chain for {u, v}, starting at u and ending at v.
    std::vector<NodeId> chain(NodeId u, NodeId v) const;
    // The k+1 deletions on the expanded graph. Throws EdgeNotFound if the edge is gone and
    // DomainError for weight increases.
    std::vector<UpdateEvent> translate_update(const UpdateEvent& e);
    static Estimate translate_query(Estimate expanded_estimate, int k);

  private:
    int k_;
    NodeId n_;
    std::unordered_map<std::uint64_t, std::size_t> ordinal_; // unordered original edge -> ordinal
    std::vector<Edge> chains_;                               // ordinal -> original edge (u < v)
    std::vector<char> live_;
    DynamicGraph expanded_;
};

struct UnweightedMultConfig {
    int k = 1;
    double p = 0.5;
    std::int64_t tau = 0; // 0 picks sqrt of the expanded edge count
    double eps = 0.1;
    std::uint64_t seed = 1;
};

// Multiplicative distances on unweighted graphs: the mixed structure on the subdivided graph,
// with estimates scaled back down by k+1.
class UnweightedMult final : public DecrementalApsp {
  public:
    UnweightedMult(DynamicGraph g, const UnweightedMultConfig& cfg);

    std::string name() const override { return "unweighted-mult"; }
    const DynamicGraph& graph() const override { return graph_; }
    void apply(const UpdateEvent& e) override;
    Estimate query(NodeId u, NodeId v) const override;
    Counters counters() const override;

    const SubdividedGraph& subdivided() const { return sub_; }
    const ApspMixed& inner() const { return *inner_; }

  private:
    UnweightedMultConfig cfg_;
    DynamicGraph graph_;
    SubdividedGraph sub_;
    std::unique_ptr<ApspMixed> inner_;
};

} // namespace decapsp
