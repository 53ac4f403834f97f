// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace decapsp {

DynamicGraph::DynamicGraph(NodeId n, Weight weight_bound) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) {
        throw DomainError("node count must be nonnegative");
    }
    set_weight_bound(weight_bound);
}

void DynamicGraph::set_weight_bound(Weight w) {
    if (w < 1) {
        throw DomainError("weight bound must be at least 1");
    }
    for (const auto& nbrs : adj_) {
        for (const auto& [_, x] : nbrs) {
            if (x > w) {
                throw DomainError("weight bound below a live edge weight");
            }
        }
    }
    weight_bound_ = w;
}

void DynamicGraph::check_node(NodeId u) const {
    if (u < 0 || u >= node_count()) {
        throw DomainError("node id " + std::to_string(u) + " out of range");
    }
}

void DynamicGraph::add_edge(NodeId u, NodeId v, Weight w) {
    check_node(u);
    check_node(v);
    if (u == v) {
        throw DomainError("self-loop at node " + std::to_string(u));
    }
    if (w < 1) {
        throw DomainError("edge weights must be positive");
    }
    if (has_edge(u, v)) {
        throw DuplicateEdge(u, v);
    }
    adj_[static_cast<std::size_t>(u)].emplace(v, w);
    adj_[static_cast<std::size_t>(v)].emplace(u, w);
    weight_bound_ = std::max(weight_bound_, w);
    ++edge_count_;
}

bool DynamicGraph::has_edge(NodeId u, NodeId v) const {
    if (u < 0 || u >= node_count() || v < 0 || v >= node_count()) {
        return false;
    }
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

Weight DynamicGraph::weight(NodeId u, NodeId v) const {
    if (!has_edge(u, v)) {
        return kInfinity;
    }
    return adj_[static_cast<std::size_t>(u)].at(v);
}

std::vector<Edge> DynamicGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u) {
        for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.push_back({u, v, w});
            }
        }
    }
    return out;
}

bool DynamicGraph::is_unweighted() const {
    return std::all_of(adj_.begin(), adj_.end(), [](const auto& nbrs) {
        return std::all_of(nbrs.begin(), nbrs.end(), [](const auto& kv) { return kv.second == 1; });
    });
}

ChangeRecord DynamicGraph::apply_update(const UpdateEvent& e) {
    if (!has_edge(e.u, e.v)) {
        throw EdgeNotFound(e.u, e.v);
    }
    auto& fwd = adj_[static_cast<std::size_t>(e.u)];
    auto& back = adj_[static_cast<std::size_t>(e.v)];
    const Weight old = fwd.at(e.v);
    if (e.is_delete()) {
        fwd.erase(e.v);
        back.erase(e.u);
        --edge_count_;
        log_.push_back(e);
        return {e.u, e.v, old, kInfinity};
    }
    if (e.new_weight <= old) {
        throw MonotonicityViolation("increase of {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} to " +
                                    std::to_string(e.new_weight) + " does not exceed current weight " +
                                    std::to_string(old));
    }
    if (e.new_weight > weight_bound_) {
        throw DomainError("increase to " + std::to_string(e.new_weight) + " exceeds weight bound " +
                          std::to_string(weight_bound_));
    }
    fwd[e.v] = e.new_weight;
    back[e.u] = e.new_weight;
    log_.push_back(e);
    return {e.u, e.v, old, e.new_weight};
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::int64_t parse_int(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError("expected an integer, got '" + std::string(field) + "'", line_no);
    }
    return value;
}

NodeId parse_node(std::string_view field, std::int64_t n, std::size_t line_no) {
    const std::int64_t v = parse_int(field, line_no);
    if (v < 0 || (n >= 0 && v >= n)) {
        throw ParseError("node id " + std::string(field) + " out of range", line_no);
    }
    return static_cast<NodeId>(v);
}

bool skippable(const std::vector<std::string_view>& fields) { return fields.empty() || fields[0].starts_with('#'); }

} // namespace

DynamicGraph load_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::int64_t n = -1;
    std::int64_t m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto f = split_fields(line);
        if (skippable(f)) {
            continue;
        }
        if (f.size() != 2) {
            throw ParseError("header must be 'n m'", line_no);
        }
        n = parse_int(f[0], line_no);
        m = parse_int(f[1], line_no);
        if (n < 0 || m < 0) {
            throw ParseError("negative count in header", line_no);
        }
        break;
    }
    if (n < 0) {
        throw ParseError("missing header", line_no);
    }
    DynamicGraph g(static_cast<NodeId>(n), 1);
    std::int64_t read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto f = split_fields(line);
        if (skippable(f)) {
            continue;
        }
        if (f.size() != 3) {
            throw ParseError("edge line must be 'u v w'", line_no);
        }
        const NodeId u = parse_node(f[0], n, line_no);
        const NodeId v = parse_node(f[1], n, line_no);
        const std::int64_t w = parse_int(f[2], line_no);
        if (w < 1) {
            throw ParseError("edge weight must be at least 1", line_no);
        }
        if (u == v) {
            throw ParseError("self-loop", line_no);
        }
        if (g.has_edge(u, v)) {
            throw ParseError("duplicate edge", line_no);
        }
        g.add_edge(u, v, w);
        ++read;
    }
    if (read != m) {
        throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(read), line_no);
    }
    return g;
}

DynamicGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

std::vector<StreamItem> load_stream(std::istream& in) {
    std::vector<StreamItem> items;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto f = split_fields(line);
        if (skippable(f)) {
            continue;
        }
        StreamItem item;
        if (f[0] == "d" && f.size() == 3) {
            item.update = UpdateEvent::remove(parse_node(f[1], -1, line_no), parse_node(f[2], -1, line_no));
        } else if (f[0] == "i" && f.size() == 4) {
            const std::int64_t w = parse_int(f[3], line_no);
            if (w < 1) {
                throw ParseError("new weight must be positive", line_no);
            }
            item.update = UpdateEvent::increase(parse_node(f[1], -1, line_no), parse_node(f[2], -1, line_no), w);
        } else if (f[0] == "q" && f.size() == 3) {
            item.is_query = true;
            item.qu = parse_node(f[1], -1, line_no);
            item.qv = parse_node(f[2], -1, line_no);
        } else {
            throw ParseError("expected 'd u v', 'i u v w' or 'q u v'", line_no);
        }
        items.push_back(item);
    }
    return items;
}

std::vector<StreamItem> parse_stream(const std::string& text) {
    std::istringstream in(text);
    return load_stream(in);
}

std::vector<UpdateEvent> parse_updates(const std::string& text) {
    std::vector<UpdateEvent> out;
    for (const auto& item : parse_stream(text)) {
        if (!item.is_query) {
            out.push_back(item.update);
        }
    }
    return out;
}

std::string serialize_graph(const DynamicGraph& g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    }
    return out.str();
}

std::string serialize_stream(const std::vector<StreamItem>& items) {
    std::ostringstream out;
    for (const auto& item : items) {
        if (item.is_query) {
            out << "q " << item.qu << ' ' << item.qv << '\n';
        } else if (item.update.is_delete()) {
            out << "d " << item.update.u << ' ' << item.update.v << '\n';
        } else {
            out << "i " << item.update.u << ' ' << item.update.v << ' ' << item.update.new_weight << '\n';
        }
    }
    return out.str();
}

DynamicGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open graph file " + path);
    }
    return load_graph(in);
}

std::vector<StreamItem> load_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open update file " + path);
    }
    return load_stream(in);
}

} // namespace decapsp
