// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "decapsp/types.hpp"

namespace decapsp {

struct Edge {
    NodeId u;
    NodeId v;
    Weight w;

    bool operator==(const Edge&) const = default;
};

struct UpdateEvent {
    enum class Kind { Delete, Increase };

    Kind kind = Kind::Delete;
    NodeId u = 0;
    NodeId v = 0;
    Weight new_weight = kInfinity; // kInfinity for Delete

    static UpdateEvent remove(NodeId u, NodeId v) { return {Kind::Delete, u, v, kInfinity}; }
    static UpdateEvent increase(NodeId u, NodeId v, Weight w) { return {Kind::Increase, u, v, w}; }

    bool is_delete() const { return kind == Kind::Delete; }
    bool operator==(const UpdateEvent&) const = default;
};

struct ChangeRecord {
    NodeId u;
    NodeId v;
    Weight old_weight;
    Weight new_weight; // kInfinity when the edge was deleted

    bool deleted() const { return new_weight >= kInfinity; }
};

// Undirected simple graph with positive integer weights bounded by weight_bound().
// Weights may only increase; a delete is an increase to infinity.
class DynamicGraph {
  public:
    DynamicGraph() = default;
    explicit DynamicGraph(NodeId n, Weight weight_bound = 1);

    NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    Weight weight_bound() const { return weight_bound_; }
    std::size_t version() const { return log_.size(); }

    // Raising the bound is allowed before or between updates; lowering below a live weight is not.
    void set_weight_bound(Weight w);

    void add_edge(NodeId u, NodeId v, Weight w);
    bool has_edge(NodeId u, NodeId v) const;
    Weight weight(NodeId u, NodeId v) const; // kInfinity when absent
    const std::map<NodeId, Weight>& neighbors(NodeId u) const { return adj_.at(static_cast<std::size_t>(u)); }
    std::size_t degree(NodeId u) const { return neighbors(u).size(); }

    // Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    bool is_unweighted() const;

    ChangeRecord apply_update(const UpdateEvent& e);
    const std::vector<UpdateEvent>& log() const { return log_; }

    // Compares adjacency and weights, not history.
    bool same_edges(const DynamicGraph& other) const { return adj_ == other.adj_; }

  private:
    void check_node(NodeId u) const;

    std::vector<std::map<NodeId, Weight>> adj_;
    std::size_t edge_count_ = 0;
    Weight weight_bound_ = 1;
    std::vector<UpdateEvent> log_;
};

// A line of an update file: either an update or a query checkpoint.
struct StreamItem {
    bool is_query = false;
    UpdateEvent update;
    NodeId qu = 0;
    NodeId qv = 0;
};

DynamicGraph load_graph(std::istream& in);
DynamicGraph parse_graph(const std::string& text);
std::vector<StreamItem> load_stream(std::istream& in);
std::vector<StreamItem> parse_stream(const std::string& text);
// Updates only, query checkpoints dropped.
std::vector<UpdateEvent> parse_updates(const std::string& text);

std::string serialize_graph(const DynamicGraph& g);
std::string serialize_stream(const std::vector<StreamItem>& items);

DynamicGraph load_graph_file(const std::string& path);
std::vector<StreamItem> load_stream_file(const std::string& path);

} // namespace decapsp
