// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/bunches.hpp"

#include <algorithm>
#include <iostream>
#include <queue>
#include <random>

namespace decapsp {

PivotSample sample_pivots(NodeId n, double p, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw DomainError("sampling probability must lie in (0,1]");
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    PivotSample s;
    s.in_set.assign(static_cast<std::size_t>(n), 0);
    for (NodeId v = 0; v < n; ++v) {
        if (coin(rng)) {
            s.in_set[static_cast<std::size_t>(v)] = 1;
            s.members.push_back(v);
        }
    }
    return s;
}

const char* to_string(BunchEvent::Kind kind) {
    switch (kind) {
    case BunchEvent::Kind::Leave: return "leave";
    case BunchEvent::Kind::DistanceIncrease: return "distance-increase";
    case BunchEvent::Kind::Join: return "join";
    }
    return "?";
}

namespace {
Weight distance_cap(const DynamicGraph& g) { return std::max<Weight>(1, g.node_count() * g.weight_bound()); }
} // namespace

BunchEngine::BunchEngine(const DynamicGraph& g, const BunchConfig& cfg)
    : BunchEngine(g, cfg, sample_pivots(g.node_count(), cfg.p, cfg.seed)) {}

BunchEngine::BunchEngine(const DynamicGraph& g, const BunchConfig& cfg, PivotSample sample)
    : sample_(std::move(sample)), slack_(Ratio::from_double(cfg.eps).divided_by(3)), rounder_(cfg.eps / 3.0),
      sources_(distance_cap(g)) {
    const auto n = static_cast<std::size_t>(g.node_count());
    if (sample_.in_set.size() != n) {
        throw DomainError("pivot sample does not match the node count");
    }
    if (sample_.members.empty() && n > 0) {
        std::clog << "warning: empty pivot set; every bunch is its whole component\n";
    }
    for (const NodeId s : sample_.members) {
        sources_.add_source(g, s);
    }
    pivot_.assign(n, -1);
    pivot_distance_.assign(n, kInfinity);
    radius_.assign(n, kInfinity);
    bunch_.resize(n);
    cluster_.resize(n);
    ever_.resize(n);
    rebuilds_.assign(n, 0);
    std::vector<BunchEvent> ignored;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        recompute_pivot(v);
        radius_[static_cast<std::size_t>(v)] = pivot_distance_[static_cast<std::size_t>(v)];
        install(v, scan_bunch(g, v, radius_[static_cast<std::size_t>(v)]), ignored);
    }
}

void BunchEngine::recompute_pivot(NodeId v) {
    NodeId best = -1;
    Weight best_d = kInfinity;
    for (const NodeId s : sample_.members) {
        const Weight d = sources_.distance(s, v);
        if (d < best_d) {
            best_d = d;
            best = s;
        }
    }
    pivot_[static_cast<std::size_t>(v)] = best;
    pivot_distance_[static_cast<std::size_t>(v)] = best_d;
}

std::unordered_map<NodeId, BunchMember> BunchEngine::scan_bunch(const DynamicGraph& g, NodeId v, Weight radius) const {
    std::unordered_map<NodeId, BunchMember> out;
    if (radius <= 0) {
        return out;
    }
    std::unordered_map<NodeId, Weight> dist;
    using Item = std::pair<Weight, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[v] = 0;
    pq.emplace(0, v);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) {
            continue;
        }
        out.emplace(u, BunchMember{d, rounder_.round(static_cast<double>(d))});
        for (const auto& [x, w] : g.neighbors(u)) {
            const Weight nd = d + w;
            if (nd >= radius) {
                continue;
            }
            auto it = dist.find(x);
            if (it == dist.end() || nd < it->second) {
                dist[x] = nd;
                pq.emplace(nd, x);
            }
        }
    }
    return out;
}

void BunchEngine::install(NodeId v, std::unordered_map<NodeId, BunchMember> next, std::vector<BunchEvent>& events) {
    auto& current = bunch_[static_cast<std::size_t>(v)];
    std::vector<BunchEvent> local;
    for (const auto& [w, old] : current) {
        auto it = next.find(w);
        if (it == next.end()) {
            local.push_back({BunchEvent::Kind::Leave, v, w, kEstimateInfinity});
            cluster_[static_cast<std::size_t>(w)].erase(v);
        } else if (it->second.rounded != old.rounded) {
            local.push_back({BunchEvent::Kind::DistanceIncrease, v, w, it->second.rounded});
        }
    }
    for (const auto& [w, member] : next) {
        if (!current.contains(w)) {
            local.push_back({BunchEvent::Kind::Join, v, w, member.rounded});
            cluster_[static_cast<std::size_t>(w)].insert(v);
            ever_[static_cast<std::size_t>(v)].insert(w);
        }
    }
    current = std::move(next);
    std::sort(local.begin(), local.end(), [](const BunchEvent& a, const BunchEvent& b) { return a.member < b.member; });
    events.insert(events.end(), local.begin(), local.end());
}

std::vector<BunchEvent> BunchEngine::refresh(const DynamicGraph& g, const ChangeRecord& change) {
    std::vector<NodeId> candidates(cluster(change.u).begin(), cluster(change.u).end());
    candidates.insert(candidates.end(), cluster(change.v).begin(), cluster(change.v).end());

    std::vector<NodeId> moved;
    for (const auto& c : sources_.apply(change)) {
        moved.insert(moved.end(), c.raised.begin(), c.raised.end());
    }
    std::sort(moved.begin(), moved.end());
    moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
    for (const NodeId v : moved) {
        recompute_pivot(v);
        const auto i = static_cast<std::size_t>(v);
        if (exceeds_scaled(pivot_distance_[i], radius_[i], slack_)) {
            radius_[i] = pivot_distance_[i];
            ++rebuilds_[i];
            candidates.push_back(v);
        }
    }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<BunchEvent> events;
    for (const NodeId v : candidates) {
        install(v, scan_bunch(g, v, radius_[static_cast<std::size_t>(v)]), events);
    }
    return events;
}

double BunchEngine::bunch_rounded(NodeId v, NodeId w) const {
    const auto& b = bunch(v);
    auto it = b.find(w);
    return it == b.end() ? kEstimateInfinity : it->second.rounded;
}

std::size_t BunchEngine::max_rebuilds() const {
    return rebuilds_.empty() ? 0 : *std::max_element(rebuilds_.begin(), rebuilds_.end());
}

std::size_t BunchEngine::total_rebuilds() const {
    std::size_t total = 0;
    for (const auto r : rebuilds_) {
        total += r;
    }
    return total;
}

std::size_t BunchEngine::bunch_load() const {
    std::size_t total = 0;
    for (const auto& e : ever_) {
        total += e.size();
    }
    return total;
}

} // namespace decapsp
