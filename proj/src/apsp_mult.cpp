// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/apsp_mult.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "index_util.hpp"

namespace decapsp {

ApspMult::ApspMult(DynamicGraph g, const MultConfig& cfg)
    : ApspMult(std::move(g), cfg, PivotSample{}) {}

ApspMult::ApspMult(DynamicGraph g, const MultConfig& cfg, PivotSample sample)
    : cfg_(cfg), graph_(std::move(g)),
      bunches_(graph_, BunchConfig{cfg.p, cfg.eps, cfg.seed},
               sample.in_set.empty() ? sample_pivots(graph_.node_count(), cfg.p, cfg.seed) : std::move(sample)),
      nbr_targets_(static_cast<std::size_t>(graph_.node_count())) {
    build();
}

double ApspMult::edge_rounded(NodeId x, NodeId y) const {
    return bunches_.rounder().round(static_cast<double>(graph_.weight(x, y)));
}

void ApspMult::build() {
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
        for (const auto& [y, _] : bunches_.bunch(v)) {
            for (const auto& [x, w] : graph_.neighbors(y)) {
                sync_neighbor(x, v, y);
            }
        }
    }
    for (NodeId u = 0; u < graph_.node_count(); ++u) {
        for (const auto& [x, _] : bunches_.bunch(u)) {
            for (const NodeId v : sorted(nbr_targets_[static_cast<std::size_t>(x)])) {
                sync_adjacent(u, v, x);
            }
        }
    }
    min_before_.clear();
    heap_touches_ = 0;
}

double ApspMult::neighbor_min(NodeId x, NodeId v) const {
    auto it = nbr_.find(pair_key(x, v));
    return it == nbr_.end() ? kEstimateInfinity : it->second.rounded_min;
}

std::size_t ApspMult::neighbor_heap_size(NodeId x, NodeId v) const {
    auto it = nbr_.find(pair_key(x, v));
    return it == nbr_.end() ? 0 : it->second.heap.size();
}

std::size_t ApspMult::adjacent_heap_size(NodeId u, NodeId v) const {
    auto it = adj_.find(pair_key(u, v));
    return it == adj_.end() ? 0 : it->second.size();
}

std::vector<std::pair<NodeId, double>> ApspMult::neighbor_entries(NodeId x, NodeId v) const {
    std::vector<std::pair<NodeId, double>> out;
    auto it = nbr_.find(pair_key(x, v));
    if (it != nbr_.end()) {
        for (const auto& e : it->second.heap.entries()) {
            out.emplace_back(e.id, e.key);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<NodeId, double>> ApspMult::adjacent_entries(NodeId u, NodeId v) const {
    std::vector<std::pair<NodeId, double>> out;
    auto it = adj_.find(pair_key(u, v));
    if (it != adj_.end()) {
        for (const auto& e : it->second.entries()) {
            out.emplace_back(e.id, e.key);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void ApspMult::sync_neighbor(NodeId x, NodeId v, NodeId y) {
    const std::uint64_t key = pair_key(x, v);
    const bool want = graph_.has_edge(x, y) && bunches_.in_bunch(v, y);
    auto it = nbr_.find(key);
    if (want) {
        const double k = edge_rounded(x, y) + bunches_.bunch_rounded(v, y);
        if (it != nbr_.end() && it->second.heap.contains(y) && it->second.heap.key(y) == k) {
            return;
        }
        min_before_.try_emplace(key, neighbor_min(x, v));
        if (it == nbr_.end()) {
            it = nbr_.emplace(key, NbrHeap{}).first;
        }
        it->second.heap.upsert(y, k);
        index_add(nbr_by_edge_, pair_key(x, y), v);
        index_add(nbr_by_member_, pair_key(y, v), x);
        nbr_targets_[static_cast<std::size_t>(x)].insert(v);
    } else {
        if (it == nbr_.end() || !it->second.heap.contains(y)) {
            return;
        }
        min_before_.try_emplace(key, neighbor_min(x, v));
        it->second.heap.erase(y);
        index_remove(nbr_by_edge_, pair_key(x, y), v);
        index_remove(nbr_by_member_, pair_key(y, v), x);
        if (it->second.heap.empty()) {
            nbr_.erase(it);
            nbr_targets_[static_cast<std::size_t>(x)].erase(v);
            ++heap_touches_;
            return;
        }
    }
    ++heap_touches_;
    it->second.rounded_min = bunches_.rounder().round(it->second.heap.top().key);
}

void ApspMult::sync_adjacent(NodeId u, NodeId v, NodeId x) {
    const std::uint64_t key = pair_key(u, v);
    const double nm = neighbor_min(x, v);
    const bool want = bunches_.in_bunch(u, x) && nm < kEstimateInfinity;
    auto it = adj_.find(key);
    if (want) {
        const double k = bunches_.bunch_rounded(u, x) + nm;
        if (it != adj_.end() && it->second.contains(x) && it->second.key(x) == k) {
            return;
        }
        if (it == adj_.end()) {
            it = adj_.emplace(key, IndexedMinHeap<double>{}).first;
        }
        it->second.upsert(x, k);
        index_add(adj_by_bunch_, pair_key(u, x), v);
        index_add(adj_by_heap_, pair_key(x, v), u);
    } else {
        if (it == adj_.end() || !it->second.contains(x)) {
            return;
        }
        it->second.erase(x);
        index_remove(adj_by_bunch_, pair_key(u, x), v);
        index_remove(adj_by_heap_, pair_key(x, v), u);
        if (it->second.empty()) {
            adj_.erase(it);
        }
    }
    ++heap_touches_;
}

void ApspMult::propagate_min(NodeId x, NodeId v) {
    auto targets = index_get(adj_by_heap_, pair_key(x, v));
    const auto& cl = bunches_.cluster(x);
    targets.insert(targets.end(), cl.begin(), cl.end());
    for (const NodeId u : unique_sorted(std::move(targets))) {
        sync_adjacent(u, v, x);
    }
}

void ApspMult::apply(const UpdateEvent& e) {
    const ChangeRecord change = graph_.apply_update(e);
    const auto events = bunches_.refresh(graph_, change);
    bunch_events_ += static_cast<std::int64_t>(events.size());
    min_before_.clear();

    const auto& rounder = bunches_.rounder();
    const bool edge_moved =
        change.deleted() ||
        rounder.round(static_cast<double>(change.old_weight)) != rounder.round(static_cast<double>(change.new_weight));
    if (edge_moved) {
        for (const auto& [x, y] : {std::pair{change.u, change.v}, std::pair{change.v, change.u}}) {
            auto targets = index_get(nbr_by_edge_, pair_key(x, y));
            const auto& cl = bunches_.cluster(y);
            targets.insert(targets.end(), cl.begin(), cl.end());
            for (const NodeId v : unique_sorted(std::move(targets))) {
                sync_neighbor(x, v, y);
            }
        }
    }

    for (const auto& ev : events) {
        const NodeId v = ev.owner;
        const NodeId y = ev.member;
        auto targets = index_get(nbr_by_member_, pair_key(y, v));
        for (const auto& [x, _] : graph_.neighbors(y)) {
            targets.push_back(x);
        }
        for (const NodeId x : unique_sorted(std::move(targets))) {
            sync_neighbor(x, v, y);
        }
    }

    std::map<std::uint64_t, double> touched(min_before_.begin(), min_before_.end());
    for (const auto& [key, before] : touched) {
        const NodeId x = key_first(key);
        const NodeId v = key_second(key);
        if (neighbor_min(x, v) == before) {
            continue;
        }
        const std::uint32_t c = ++min_changes_[key];
        max_min_changes_ = std::max(max_min_changes_, c);
        ++min_change_total_;
        propagate_min(x, v);
    }

    for (const auto& ev : events) {
        const NodeId u = ev.owner;
        const NodeId x = ev.member;
        auto targets = index_get(adj_by_bunch_, pair_key(u, x));
        const auto& tg = nbr_targets_[static_cast<std::size_t>(x)];
        targets.insert(targets.end(), tg.begin(), tg.end());
        for (const NodeId v : unique_sorted(std::move(targets))) {
            sync_adjacent(u, v, x);
        }
    }
}

Estimate ApspMult::query(NodeId u, NodeId v) const {
    if (u == v) {
        return 0.0;
    }
    Estimate best = kEstimateInfinity;
    for (const auto& [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        const NodeId piv = bunches_.pivot(a);
        if (piv >= 0) {
            const Weight d = saturating_add(bunches_.pivot_distance(a), bunches_.pivot_set_distance(piv, b));
            best = std::min(best, to_estimate(d));
        }
    }
    auto it = adj_.find(pair_key(u, v));
    if (it != adj_.end()) {
        best = std::min(best, it->second.top().key);
    }
    return best;
}

Counters ApspMult::counters() const {
    return {
        {"bunch_rebuilds", static_cast<std::int64_t>(bunches_.total_rebuilds())},
        {"max_node_rebuilds", static_cast<std::int64_t>(bunches_.max_rebuilds())},
        {"bunch_load", static_cast<std::int64_t>(bunches_.bunch_load())},
        {"bunch_events", bunch_events_},
        {"heap_touches", heap_touches_},
        {"level_increases", static_cast<std::int64_t>(bunches_.a_level_increases())},
        {"neighbor_min_changes", min_change_total_},
        {"max_neighbor_min_changes", static_cast<std::int64_t>(max_min_changes_)},
        {"pivot_set_size", static_cast<std::int64_t>(bunches_.pivot_set().size())},
    };
}

void ApspMult::check_invariants() const {
    const auto& rounder = bunches_.rounder();
    const NodeId n = graph_.node_count();
    auto fail = [](const std::string& what) { throw std::logic_error("mult invariant: " + what); };

    std::map<std::uint64_t, std::map<NodeId, double>> want_nbr;
    for (NodeId v = 0; v < n; ++v) {
        for (const auto& [y, member] : bunches_.bunch(v)) {
            for (const auto& [x, w] : graph_.neighbors(y)) {
                want_nbr[pair_key(x, v)][y] = rounder.round(static_cast<double>(w)) + member.rounded;
            }
        }
    }
    if (want_nbr.size() != nbr_.size()) {
        fail("neighbor heap count " + std::to_string(nbr_.size()) + " != " + std::to_string(want_nbr.size()));
    }
    std::map<std::uint64_t, double> want_min;
    for (const auto& [key, entries] : want_nbr) {
        auto it = nbr_.find(key);
        if (it == nbr_.end() || it->second.heap.size() != entries.size()) {
            fail("neighbor heap contents differ");
        }
        double lo = kEstimateInfinity;
        for (const auto& [y, k] : entries) {
            if (!it->second.heap.contains(y) || it->second.heap.key(y) != k) {
                fail("neighbor heap key differs");
            }
            lo = std::min(lo, k);
            if (!index_has(nbr_by_edge_, pair_key(key_first(key), y), key_second(key)) ||
                !index_has(nbr_by_member_, pair_key(y, key_second(key)), key_first(key))) {
                fail("neighbor reverse index missing an entry");
            }
        }
        want_min[key] = rounder.round(lo);
        if (it->second.rounded_min != want_min[key]) {
            fail("neighbor rounded minimum stale");
        }
        if (!nbr_targets_[static_cast<std::size_t>(key_first(key))].contains(key_second(key))) {
            fail("neighbor target index missing");
        }
    }
    std::size_t target_total = 0;
    for (const auto& t : nbr_targets_) {
        target_total += t.size();
    }
    if (target_total != want_nbr.size() || index_total(nbr_by_edge_) != index_total(nbr_by_member_)) {
        fail("neighbor reverse index size");
    }

    std::map<std::uint64_t, std::map<NodeId, double>> want_adj;
    for (const auto& [key, m] : want_min) {
        const NodeId x = key_first(key);
        const NodeId v = key_second(key);
        for (const NodeId u : bunches_.cluster(x)) {
            want_adj[pair_key(u, v)][x] = bunches_.bunch_rounded(u, x) + m;
        }
    }
    if (want_adj.size() != adj_.size()) {
        fail("adjacent heap count " + std::to_string(adj_.size()) + " != " + std::to_string(want_adj.size()));
    }
    std::size_t entries_total = 0;
    for (const auto& [key, entries] : want_adj) {
        auto it = adj_.find(key);
        if (it == adj_.end() || it->second.size() != entries.size()) {
            fail("adjacent heap contents differ");
        }
        for (const auto& [x, k] : entries) {
            if (!it->second.contains(x) || it->second.key(x) != k) {
                fail("adjacent heap key differs");
            }
            if (!index_has(adj_by_bunch_, pair_key(key_first(key), x), key_second(key)) ||
                !index_has(adj_by_heap_, pair_key(x, key_second(key)), key_first(key))) {
                fail("adjacent reverse index missing an entry");
            }
        }
        entries_total += entries.size();
    }
    if (index_total(adj_by_bunch_) != entries_total || index_total(adj_by_heap_) != entries_total) {
        fail("adjacent reverse index size");
    }
}

} // namespace decapsp
