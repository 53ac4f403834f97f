// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/additive.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace decapsp {

HittingHierarchy::HittingHierarchy(NodeId n, std::size_t m, int k, double c, std::uint64_t seed)
    : k_(k), n_(static_cast<double>(n)), m_(static_cast<double>(m)), c_(c),
      level_(static_cast<std::size_t>(n), k), members_(static_cast<std::size_t>(k) + 1) {
    if (k < 2) {
        throw DomainError("the hierarchy needs at least two levels");
    }
    if (!(c > 0.0)) {
        throw DomainError("sampling constant must be positive");
    }
    std::mt19937_64 rng(seed);
    for (int i = 1; i < k; ++i) {
        std::bernoulli_distribution coin(probability(i));
        for (NodeId v = 0; v < n; ++v) {
            if (coin(rng) && level_[static_cast<std::size_t>(v)] > i) {
                level_[static_cast<std::size_t>(v)] = i;
            }
        }
    }
    for (NodeId v = 0; v < n; ++v) {
        members_[static_cast<std::size_t>(level_[static_cast<std::size_t>(v)])].push_back(v);
    }
}

double HittingHierarchy::threshold(int i) const {
    if (i < 0 || i >= k_) {
        throw DomainError("threshold index out of range");
    }
    if (n_ <= 0.0) {
        return 0.0;
    }
    const double frac = static_cast<double>(i) / static_cast<double>(k_);
    return std::pow(m_ / n_, 1.0 - frac) * std::pow(std::log(n_), frac);
}

double HittingHierarchy::probability(int i) const {
    const double s = threshold(i);
    if (s <= 0.0) {
        return 1.0;
    }
    return std::min(1.0, c_ * std::log(n_) / s);
}

EdgeSets::EdgeSets(const DynamicGraph& g, const HittingHierarchy& h)
    : h_(&h), scan_order_(static_cast<std::size_t>(g.node_count())),
      cursor_(static_cast<std::size_t>(g.node_count()), 0), index_(static_cast<std::size_t>(g.node_count()), h.k() + 1),
      star_(static_cast<std::size_t>(g.node_count()), -1), level_additions_(static_cast<std::size_t>(h.k()) + 1, 0) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const auto& [x, _] : g.neighbors(v)) {
            scan_order_[static_cast<std::size_t>(v)].push_back(x);
            index_[static_cast<std::size_t>(v)] = std::min(index_[static_cast<std::size_t>(v)], h.level(x));
        }
        pick_star(g, v, 0);
    }
    for (const auto& e : g.edges()) {
        for (int i = 1; i <= h.k(); ++i) {
            if (in_level_set(e.u, e.v, i)) {
                ++level_additions_[static_cast<std::size_t>(i)];
            }
        }
    }
}

bool EdgeSets::pick_star(const DynamicGraph& g, NodeId v, std::size_t from) {
    const auto vi = static_cast<std::size_t>(v);
    const auto& order = scan_order_[vi];
    for (std::size_t idx = from; idx < order.size(); ++idx) {
        const NodeId x = order[idx];
        if (g.has_edge(v, x) && h_->level(x) == index_[vi]) {
            star_[vi] = x;
            cursor_[vi] = idx;
            ++star_additions_;
            return true;
        }
    }
    star_[vi] = -1;
    return false;
}

EdgeSets::Delta EdgeSets::on_delete(const DynamicGraph& g, NodeId a, NodeId b) {
    Delta delta;
    delta.level_added.resize(static_cast<std::size_t>(h_->k()) + 1);
    for (const auto& [v, w] : {NodePair{a, b}, NodePair{b, a}}) {
        const auto vi = static_cast<std::size_t>(v);
        if (star_[vi] != w) {
            continue;
        }
        if (pick_star(g, v, cursor_[vi] + 1)) {
            delta.star_added.emplace_back(v, star_[vi]);
            continue;
        }
        const int old_index = index_[vi];
        int next = h_->k() + 1;
        for (const auto& [x, _] : g.neighbors(v)) {
            next = std::min(next, h_->level(x));
        }
        index_[vi] = next;
        for (const auto& [x, _] : g.neighbors(v)) {
            const int other = index(x);
            for (int i = 2; i <= h_->k(); ++i) {
                if (std::max(old_index, other) < i && std::max(next, other) >= i) {
                    delta.level_added[static_cast<std::size_t>(i)].emplace_back(v, x);
                    ++level_additions_[static_cast<std::size_t>(i)];
                }
            }
        }
        if (next <= h_->k() && pick_star(g, v, 0)) {
            delta.star_added.emplace_back(v, star_[vi]);
        }
    }
    return delta;
}

AdditiveApsp::AdditiveApsp(DynamicGraph g, const AdditiveConfig& cfg)
    : cfg_(cfg), graph_(std::move(g)),
      hierarchy_(graph_.node_count(), graph_.edge_count(), cfg.k, cfg.c, cfg.seed), sets_(graph_, hierarchy_),
      cap_(cfg.d + 3 * cfg.k), trees_(static_cast<std::size_t>(graph_.node_count())),
      slots_(static_cast<std::size_t>(graph_.node_count())), pending_(static_cast<std::size_t>(graph_.node_count())) {
    const NodeId n = graph_.node_count();
    const int max_k = std::max(2, static_cast<int>(std::floor(std::log2(std::max<double>(n, 1.0)))));
    if (cfg.k > max_k) {
        throw ConfigError("k must lie in [2, log2 n]");
    }
    if (cfg.d < 1) {
        throw ConfigError("distance bound d must be at least 1");
    }
    if (!graph_.is_unweighted()) {
        throw DomainError("additive distances expect an unweighted graph");
    }
    const auto all_edges = graph_.edges();
    for (int i = 1; i <= cfg.k; ++i) {
        for (const NodeId u : hierarchy_.members(i)) {
            const auto ui = static_cast<std::size_t>(u);
            if (i == 1) {
                trees_[ui] = std::make_unique<MonotoneESTree>(graph_, u, cap_);
                continue;
            }
            std::vector<Edge> edges;
            auto& slots = slots_[ui];
            for (const auto& e : all_edges) {
                if (!sets_.in_level_set(e.u, e.v, i) && !sets_.in_star(e.u, e.v)) {
                    continue;
                }
                if (e.u == u || e.v == u) {
                    slots[e.u == u ? e.v : e.u].real = true;
                } else {
                    edges.push_back({e.u, e.v, 1});
                }
            }
            for (int j = 1; j < i; ++j) {
                for (const NodeId v : hierarchy_.members(j)) {
                    const Weight l = trees_[static_cast<std::size_t>(v)]->level(u);
                    if (l < kInfinity) {
                        slots[v].exported = l;
                    }
                }
            }
            for (const auto& [other, slot] : slots) {
                const Weight w = slot.real ? 1 : slot.exported;
                if (w < kInfinity) {
                    edges.push_back({u, other, w});
                }
            }
            trees_[ui] = std::make_unique<MonotoneESTree>(n, edges, u, cap_);
        }
    }
}

bool AdditiveApsp::has_real_edge(NodeId root, NodeId a, NodeId b) const {
    const auto& t = tree(root);
    if (hierarchy_.level(root) == 1 || (a != root && b != root)) {
        return t.has_edge(a, b);
    }
    const auto& slots = slots_[static_cast<std::size_t>(root)];
    auto it = slots.find(a == root ? b : a);
    return it != slots.end() && it->second.real;
}

std::vector<NodeId> AdditiveApsp::sync_slot(NodeId root, NodeId other) {
    auto& t = *trees_[static_cast<std::size_t>(root)];
    const RootSlot& slot = slots_[static_cast<std::size_t>(root)][other];
    const Weight want = slot.real ? 1 : slot.exported;
    const Weight cur = t.edge_weight(root, other);
    if (want == cur) {
        return {};
    }
    if (cur >= kInfinity) {
        t.insert_edge(root, other, want);
        return {};
    }
    if (want >= kInfinity) {
        return t.delete_edge(root, other);
    }
    if (want < cur) {
        t.lower_weight(root, other, want);
        return {};
    }
    return t.increase_weight(root, other, want);
}

void AdditiveApsp::add_real(NodeId root, NodeId a, NodeId b) {
    if (a == root || b == root) {
        slots_[static_cast<std::size_t>(root)][a == root ? b : a].real = true;
        sync_slot(root, a == root ? b : a);
        return;
    }
    auto& t = *trees_[static_cast<std::size_t>(root)];
    if (!t.has_edge(a, b)) {
        t.insert_edge(a, b, 1);
    }
}

std::vector<NodeId> AdditiveApsp::remove_real(NodeId root, NodeId a, NodeId b) {
    if (a == root || b == root) {
        slots_[static_cast<std::size_t>(root)][a == root ? b : a].real = false;
        return sync_slot(root, a == root ? b : a);
    }
    return trees_[static_cast<std::size_t>(root)]->delete_edge(a, b);
}

void AdditiveApsp::export_levels(NodeId root, const std::vector<NodeId>& raised) {
    const int i = hierarchy_.level(root);
    const auto& t = tree(root);
    for (const NodeId x : raised) {
        if (hierarchy_.level(x) > i) {
            pending_[static_cast<std::size_t>(x)][root] = t.level(x);
            ++export_updates_;
        }
    }
}

void AdditiveApsp::apply(const UpdateEvent& e) {
    if (!e.is_delete()) {
        throw DomainError("additive distances support deletions only");
    }
    graph_.apply_update(e);
    const auto delta = sets_.on_delete(graph_, e.u, e.v);
    for (int i = 1; i <= cfg_.k; ++i) {
        for (const NodeId u : hierarchy_.members(i)) {
            const auto ui = static_cast<std::size_t>(u);
            std::vector<NodeId> raised;
            if (i == 1) {
                raised = trees_[ui]->delete_edge(e.u, e.v);
            } else {
                for (const auto& [x, y] : delta.star_added) {
                    add_real(u, x, y);
                }
                for (const auto& [x, y] : delta.level_added[static_cast<std::size_t>(i)]) {
                    add_real(u, x, y);
                }
                for (const auto& [v, w] : pending_[ui]) {
                    slots_[ui][v].exported = w;
                    const auto r = sync_slot(u, v);
                    raised.insert(raised.end(), r.begin(), r.end());
                }
                pending_[ui].clear();
                if (has_real_edge(u, e.u, e.v)) {
                    const auto r = remove_real(u, e.u, e.v);
                    raised.insert(raised.end(), r.begin(), r.end());
                }
                std::sort(raised.begin(), raised.end());
                raised.erase(std::unique(raised.begin(), raised.end()), raised.end());
            }
            export_levels(u, raised);
        }
    }
}

Estimate AdditiveApsp::query(NodeId u, NodeId v) const {
    if (u == v) {
        return 0.0;
    }
    const int iu = hierarchy_.level(u);
    const int iv = hierarchy_.level(v);
    if (iu < iv) {
        return to_estimate(tree(u).level(v));
    }
    if (iv < iu) {
        return to_estimate(tree(v).level(u));
    }
    return to_estimate(std::min(tree(u).level(v), tree(v).level(u)));
}

Counters AdditiveApsp::counters() const {
    std::int64_t increases = 0;
    for (const auto& t : trees_) {
        increases += static_cast<std::int64_t>(t->level_increases());
    }
    std::int64_t level_edges = 0;
    for (int i = 2; i <= cfg_.k; ++i) {
        level_edges += static_cast<std::int64_t>(sets_.level_additions(i));
    }
    return {
        {"estar_additions", static_cast<std::int64_t>(sets_.star_additions())},
        {"ei_additions", level_edges},
        {"level_increases", increases},
        {"export_updates", export_updates_},
        {"level1_roots", static_cast<std::int64_t>(hierarchy_.members(1).size())},
    };
}

void AdditiveApsp::check_structure() const {
    auto fail = [](const std::string& what) { throw std::logic_error("additive structure: " + what); };
    const NodeId n = graph_.node_count();
    const auto live = graph_.edges();
    for (NodeId u = 0; u < n; ++u) {
        const int i = hierarchy_.level(u);
        const auto& t = tree(u);
        std::size_t expected_real = 0;
        for (const auto& e : live) {
            const bool want = i == 1 || sets_.in_level_set(e.u, e.v, i) || sets_.in_star(e.u, e.v);
            expected_real += want ? 1 : 0;
            if (want != has_real_edge(u, e.u, e.v)) {
                fail("root " + std::to_string(u) + " edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     "} membership wrong");
            }
        }
        std::size_t present_real = 0;
        for (NodeId x = 0; x < n; ++x) {
            for (const auto& [y, _] : t.neighbors(x)) {
                if (x < y && has_real_edge(u, x, y)) {
                    ++present_real;
                    if (!graph_.has_edge(x, y)) {
                        fail("tree keeps a deleted edge");
                    }
                }
            }
        }
        if (present_real != expected_real) {
            fail("tree holds extra edges");
        }
        for (NodeId v = 0; v < n; ++v) {
            if (sets_.index(v) < i) {
                const NodeId x = sets_.star_partner(v);
                if (x < 0 || hierarchy_.level(x) >= i || !has_real_edge(u, v, x)) {
                    fail("node " + std::to_string(v) + " lacks a star edge to a lower level in tree " +
                         std::to_string(u));
                }
            } else {
                for (const auto& [x, _] : graph_.neighbors(v)) {
                    if (!has_real_edge(u, v, x)) {
                        fail("node " + std::to_string(v) + " is missing an adjacent edge in tree " + std::to_string(u));
                    }
                }
            }
        }
    }
}

} // namespace decapsp
