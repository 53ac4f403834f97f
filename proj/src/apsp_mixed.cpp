// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/apsp_mixed.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "index_util.hpp"

namespace decapsp {

ApspMixed::ApspMixed(DynamicGraph g, const MixedConfig& cfg) : ApspMixed(std::move(g), cfg, PivotSample{}) {}

ApspMixed::ApspMixed(DynamicGraph g, const MixedConfig& cfg, PivotSample sample)
    : cfg_(cfg), graph_(std::move(g)),
      bunches_(graph_, BunchConfig{cfg.p, cfg.eps, cfg.seed},
               sample.in_set.empty() ? sample_pivots(graph_.node_count(), cfg.p, cfg.seed) : std::move(sample)),
      heavy_trees_(std::max<Weight>(1, graph_.node_count() * graph_.weight_bound())),
      heavy_since_(static_cast<std::size_t>(graph_.node_count()), -1),
      heavy_pivot_(static_cast<std::size_t>(graph_.node_count())) {
    if (cfg.tau < 1) {
        throw ConfigError("overlap threshold must be at least 1");
    }
    const NodeId n = graph_.node_count();
    for (NodeId w = 0; w < n; ++w) {
        if (static_cast<std::int64_t>(bunches_.cluster(w).size()) >= cfg.tau) {
            promote(w);
        }
    }
    promotions_ = 0;
    for (NodeId w = 0; w < n; ++w) {
        if (is_heavy(w)) {
            continue;
        }
        for (const NodeId u : sorted(bunches_.cluster(w))) {
            sync_member(u, w);
        }
    }
    heap_touches_ = 0;
}

void ApspMixed::promote(NodeId w) {
    heavy_since_[static_cast<std::size_t>(w)] = static_cast<std::int64_t>(graph_.version());
    heavy_trees_.add_source(graph_, w);
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
        heavy_pivot_[static_cast<std::size_t>(v)].upsert(w, heavy_trees_.distance(w, v));
    }
    ++promotions_;
}

NodeId ApspMixed::heavy_pivot(NodeId v) const {
    const auto& h = heavy_pivot_[static_cast<std::size_t>(v)];
    if (h.empty() || h.top().key >= kInfinity) {
        return -1;
    }
    return h.top().id;
}

std::size_t ApspMixed::overlap_heap_size(NodeId u, NodeId v) const {
    auto it = overlap_.find(unordered_pair_key(u, v));
    return it == overlap_.end() ? 0 : it->second.size();
}

std::size_t ApspMixed::overlap_entries_for(NodeId w) const {
    std::size_t total = 0;
    for (const auto& [_, heap] : overlap_) {
        total += heap.contains(w) ? 1 : 0;
    }
    return total;
}

std::vector<std::pair<NodeId, double>> ApspMixed::overlap_entries(NodeId u, NodeId v) const {
    std::vector<std::pair<NodeId, double>> out;
    auto it = overlap_.find(unordered_pair_key(u, v));
    if (it != overlap_.end()) {
        for (const auto& e : it->second.entries()) {
            out.emplace_back(e.id, e.key);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void ApspMixed::sync_overlap(NodeId u, NodeId v, NodeId w) {
    const std::uint64_t key = unordered_pair_key(u, v);
    const bool want = !is_heavy(w) && bunches_.in_bunch(u, w) && bunches_.in_bunch(v, w);
    auto it = overlap_.find(key);
    if (want) {
        const double k = bunches_.bunch_rounded(u, w) + bunches_.bunch_rounded(v, w);
        if (it != overlap_.end() && it->second.contains(w) && it->second.key(w) == k) {
            return;
        }
        if (it == overlap_.end()) {
            it = overlap_.emplace(key, IndexedMinHeap<double>{}).first;
        }
        it->second.upsert(w, k);
        index_add(overlap_index_, pair_key(w, u), v);
        index_add(overlap_index_, pair_key(w, v), u);
    } else {
        if (it == overlap_.end() || !it->second.contains(w)) {
            return;
        }
        it->second.erase(w);
        index_remove(overlap_index_, pair_key(w, u), v);
        index_remove(overlap_index_, pair_key(w, v), u);
        if (it->second.empty()) {
            overlap_.erase(it);
        }
    }
    ++heap_touches_;
}

// Re-derives every overlap entry naming w that involves the bunch of `owner`.
void ApspMixed::sync_member(NodeId owner, NodeId w) {
    auto targets = index_get(overlap_index_, pair_key(w, owner));
    if (!is_heavy(w)) {
        const auto& cl = bunches_.cluster(w);
        targets.insert(targets.end(), cl.begin(), cl.end());
    }
    for (const NodeId v : unique_sorted(std::move(targets))) {
        if (v != owner) {
            sync_overlap(owner, v, w);
        }
    }
}

void ApspMixed::apply(const UpdateEvent& e) {
    const ChangeRecord change = graph_.apply_update(e);
    for (const auto& c : heavy_trees_.apply(change)) {
        for (const NodeId v : c.raised) {
            heavy_pivot_[static_cast<std::size_t>(v)].upsert(c.source, heavy_trees_.distance(c.source, v));
        }
    }
    const auto events = bunches_.refresh(graph_, change);
    bunch_events_ += static_cast<std::int64_t>(events.size());

    std::vector<NodeId> promoted;
    for (const auto& ev : events) {
        const NodeId w = ev.member;
        if (ev.kind == BunchEvent::Kind::Join && !is_heavy(w) &&
            static_cast<std::int64_t>(bunches_.cluster(w).size()) >= cfg_.tau) {
            promote(w);
            promoted.push_back(w);
        }
    }
    for (const NodeId w : promoted) {
        std::vector<NodeId> owners;
        for (NodeId u = 0; u < graph_.node_count(); ++u) {
            if (overlap_index_.contains(pair_key(w, u))) {
                owners.push_back(u);
            }
        }
        for (const NodeId u : owners) {
            sync_member(u, w);
        }
    }
    for (const auto& ev : events) {
        if (!is_heavy(ev.member)) {
            sync_member(ev.owner, ev.member);
        }
    }
}

Estimate ApspMixed::query(NodeId u, NodeId v) const {
    if (u == v) {
        return 0.0;
    }
    Estimate best = kEstimateInfinity;
    for (const auto& [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        const NodeId piv = bunches_.pivot(a);
        if (piv >= 0) {
            best = std::min(best, to_estimate(saturating_add(bunches_.pivot_distance(a),
                                                             bunches_.pivot_set_distance(piv, b))));
        }
        const NodeId q = heavy_pivot(a);
        if (q >= 0) {
            best = std::min(best, to_estimate(saturating_add(heavy_trees_.distance(q, a), heavy_trees_.distance(q, b))));
        }
    }
    auto it = overlap_.find(unordered_pair_key(u, v));
    if (it != overlap_.end()) {
        best = std::min(best, it->second.top().key);
    }
    return best;
}

Counters ApspMixed::counters() const {
    std::size_t overlap_entries = 0;
    for (const auto& [_, h] : overlap_) {
        overlap_entries += h.size();
    }
    return {
        {"bunch_rebuilds", static_cast<std::int64_t>(bunches_.total_rebuilds())},
        {"max_node_rebuilds", static_cast<std::int64_t>(bunches_.max_rebuilds())},
        {"bunch_load", static_cast<std::int64_t>(bunches_.bunch_load())},
        {"bunch_events", bunch_events_},
        {"heap_touches", heap_touches_},
        {"level_increases",
         static_cast<std::int64_t>(bunches_.a_level_increases() + heavy_trees_.level_increases())},
        {"promotions", promotions_},
        {"heavy_nodes", static_cast<std::int64_t>(heavy_trees_.size())},
        {"overlap_entries", static_cast<std::int64_t>(overlap_entries)},
        {"pivot_set_size", static_cast<std::int64_t>(bunches_.pivot_set().size())},
    };
}

void ApspMixed::check_invariants() const {
    auto fail = [](const std::string& what) { throw std::logic_error("mixed invariant: " + what); };
    const NodeId n = graph_.node_count();
    for (NodeId v = 0; v < n; ++v) {
        const auto& h = heavy_pivot_[static_cast<std::size_t>(v)];
        if (h.size() != heavy_trees_.size()) {
            fail("heavy pivot heap does not hold every heavy node");
        }
        for (const NodeId s : heavy_trees_.sources()) {
            if (!h.contains(s) || h.key(s) != heavy_trees_.distance(s, v)) {
                fail("heavy pivot key stale");
            }
        }
    }
    std::map<std::uint64_t, std::map<NodeId, double>> want;
    for (NodeId w = 0; w < n; ++w) {
        if (is_heavy(w)) {
            continue;
        }
        const auto owners = sorted(bunches_.cluster(w));
        for (std::size_t i = 0; i < owners.size(); ++i) {
            for (std::size_t j = i + 1; j < owners.size(); ++j) {
                want[unordered_pair_key(owners[i], owners[j])][w] =
                    bunches_.bunch_rounded(owners[i], w) + bunches_.bunch_rounded(owners[j], w);
            }
        }
    }
    if (want.size() != overlap_.size()) {
        fail("overlap heap count " + std::to_string(overlap_.size()) + " != " + std::to_string(want.size()));
    }
    std::size_t total = 0;
    for (const auto& [key, entries] : want) {
        auto it = overlap_.find(key);
        if (it == overlap_.end() || it->second.size() != entries.size()) {
            fail("overlap heap contents differ");
        }
        for (const auto& [w, k] : entries) {
            if (!it->second.contains(w) || it->second.key(w) != k) {
                fail("overlap key differs");
            }
            if (!index_has(overlap_index_, pair_key(w, key_first(key)), key_second(key)) ||
                !index_has(overlap_index_, pair_key(w, key_second(key)), key_first(key))) {
                fail("overlap reverse index missing an entry");
            }
        }
        total += entries.size();
    }
    if (index_total(overlap_index_) != 2 * total) {
        fail("overlap reverse index size");
    }
}

} // namespace decapsp
