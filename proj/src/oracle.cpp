// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "decapsp/bunches.hpp"

namespace decapsp {

NodeId oracle_cap() {
    if (const char* env = std::getenv("DECAPSP_ORACLE_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<NodeId>(v);
        }
    }
    return 512;
}

namespace {

void check_cap(const DynamicGraph& g) {
    if (g.node_count() > oracle_cap()) {
        throw OracleTooLarge("graph has " + std::to_string(g.node_count()) + " nodes, oracle cap is " +
                             std::to_string(oracle_cap()));
    }
}

std::vector<Weight> bfs(const DynamicGraph& g, NodeId s) {
    std::vector<Weight> dist(static_cast<std::size_t>(g.node_count()), kInfinity);
    std::deque<NodeId> q{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
        const NodeId u = q.front();
        q.pop_front();
        for (const auto& [v, _] : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kInfinity) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<Weight> dijkstra(const DynamicGraph& g, NodeId s) {
    std::vector<Weight> dist(static_cast<std::size_t>(g.node_count()), kInfinity);
    using Item = std::pair<Weight, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(s)] = 0;
    pq.emplace(0, s);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[static_cast<std::size_t>(u)]) {
            continue;
        }
        for (const auto& [v, w] : g.neighbors(u)) {
            if (d + w < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = d + w;
                pq.emplace(d + w, v);
            }
        }
    }
    return dist;
}

// Exact distances from s to nodes strictly closer than `radius`.
std::unordered_map<NodeId, Weight> ball(const DynamicGraph& g, NodeId s, Weight radius) {
    std::unordered_map<NodeId, Weight> dist;
    if (radius <= 0) {
        return dist;
    }
    using Item = std::pair<Weight, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    std::unordered_map<NodeId, Weight> tentative{{s, 0}};
    pq.emplace(0, s);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (dist.contains(u)) {
            continue;
        }
        dist.emplace(u, d);
        for (const auto& [v, w] : g.neighbors(u)) {
            const Weight nd = d + w;
            if (nd >= radius || dist.contains(v)) {
                continue;
            }
            auto it = tentative.find(v);
            if (it == tentative.end() || nd < it->second) {
                tentative[v] = nd;
                pq.emplace(nd, v);
            }
        }
    }
    return dist;
}

} // namespace

std::vector<Weight> single_source(const DynamicGraph& g, NodeId s) {
    return g.is_unweighted() ? bfs(g, s) : dijkstra(g, s);
}

DistanceMatrix exact_apsp(const DynamicGraph& g) {
    check_cap(g);
    const NodeId n = g.node_count();
    DistanceMatrix d(n, kInfinity);
    const bool unit = g.is_unweighted();
    for (NodeId s = 0; s < n; ++s) {
        const auto row = unit ? bfs(g, s) : dijkstra(g, s);
        for (NodeId v = 0; v < n; ++v) {
            d.at(s, v) = row[static_cast<std::size_t>(v)];
        }
    }
    return d;
}

DistanceMatrix bottleneck_weights(const DynamicGraph& g) {
    check_cap(g);
    const NodeId n = g.node_count();
    DistanceMatrix out(n, 0);
    std::vector<NodeId> order(static_cast<std::size_t>(n));
    for (NodeId s = 0; s < n; ++s) {
        const auto dist = dijkstra(g, s);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
            return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
        });
        // Nodes in distance order; every predecessor on the shortest-path DAG comes first.
        for (const NodeId y : order) {
            const Weight dy = dist[static_cast<std::size_t>(y)];
            if (y == s || dy >= kInfinity) {
                continue;
            }
            Weight best = 0;
            for (const auto& [x, w] : g.neighbors(y)) {
                if (dist[static_cast<std::size_t>(x)] + w == dy) {
                    best = std::max({best, w, out.at(s, x)});
                }
            }
            out.at(s, y) = best;
        }
    }
    return out;
}

EstimateMatrix static_two_apsp(const DynamicGraph& g, double p, std::uint64_t seed) {
    check_cap(g);
    const NodeId n = g.node_count();
    const PivotSample sample = sample_pivots(n, p, seed);
    std::vector<std::vector<Weight>> from_pivot;
    for (const NodeId s : sample.members) {
        from_pivot.push_back(single_source(g, s));
    }
    std::vector<Weight> pivot_dist(static_cast<std::size_t>(n), kInfinity);
    std::vector<int> pivot(static_cast<std::size_t>(n), -1);
    for (NodeId v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < from_pivot.size(); ++i) {
            if (from_pivot[i][static_cast<std::size_t>(v)] < pivot_dist[static_cast<std::size_t>(v)]) {
                pivot_dist[static_cast<std::size_t>(v)] = from_pivot[i][static_cast<std::size_t>(v)];
                pivot[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        }
    }
    std::vector<std::unordered_map<NodeId, Weight>> bunch(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) {
        bunch[static_cast<std::size_t>(v)] = ball(g, v, pivot_dist[static_cast<std::size_t>(v)]);
    }

    EstimateMatrix est(n, kEstimateInfinity);
    std::vector<Weight> via(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) {
        // via[x] = min over neighbors y of x inside B(v) of w(x,y) + d(y,v)
        std::fill(via.begin(), via.end(), kInfinity);
        for (const auto& [y, dy] : bunch[static_cast<std::size_t>(v)]) {
            for (const auto& [x, w] : g.neighbors(y)) {
                via[static_cast<std::size_t>(x)] = std::min(via[static_cast<std::size_t>(x)], dy + w);
            }
        }
        for (NodeId u = 0; u < n; ++u) {
            if (u == v) {
                est.at(u, v) = 0.0;
                continue;
            }
            Weight best = kInfinity;
            for (const auto& [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                const int pi = pivot[static_cast<std::size_t>(a)];
                if (pi >= 0) {
                    best = std::min(best, saturating_add(pivot_dist[static_cast<std::size_t>(a)],
                                                         from_pivot[static_cast<std::size_t>(pi)][static_cast<std::size_t>(b)]));
                }
            }
            for (const auto& [x, dx] : bunch[static_cast<std::size_t>(u)]) {
                best = std::min(best, saturating_add(dx, via[static_cast<std::size_t>(x)]));
            }
            est.at(u, v) = to_estimate(best);
        }
    }
    return est;
}

StaticTwoApsp::StaticTwoApsp(DynamicGraph g, double p, std::uint64_t seed)
    : graph_(std::move(g)), p_(p), seed_(seed), est_(static_two_apsp(graph_, p, seed)) {}

void StaticTwoApsp::apply(const UpdateEvent& e) {
    graph_.apply_update(e);
    est_ = static_two_apsp(graph_, p_, seed_);
    ++rebuilds_;
}

nlohmann::json to_json(const BoundSpec& b) {
    const char* kind = b.kind == BoundSpec::Kind::Multiplicative ? "multiplicative"
                       : b.kind == BoundSpec::Kind::MixedWeight  ? "mixed-weight"
                                                                  : "additive";
    nlohmann::json j{{"kind", kind}, {"alpha", b.alpha}, {"beta", b.beta}};
    if (b.within < kInfinity) {
        j["within"] = b.within;
    }
    return j;
}

namespace {
nlohmann::json finite_or_null(double x) {
    if (std::isinf(x)) {
        return nullptr;
    }
    return x;
}
} // namespace

nlohmann::json to_json(const StretchReport& r) {
    nlohmann::json cps = nlohmann::json::array();
    for (const auto& c : r.checkpoints) {
        cps.push_back({{"version", c.version},
                       {"pairs_checked", c.pairs_checked},
                       {"violations", c.violations},
                       {"max_ratio", c.max_ratio},
                       {"max_additive", c.max_additive}});
    }
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.violations) {
        vs.push_back({{"version", v.version},
                      {"u", v.u},
                      {"v", v.v},
                      {"distance", v.distance >= kInfinity ? nlohmann::json(nullptr) : nlohmann::json(v.distance)},
                      {"estimate", finite_or_null(v.estimate)},
                      {"bound", finite_or_null(v.bound)}});
    }
    return {{"checkpoints", cps}, {"violations", vs}, {"total_violations", r.total_violations}, {"pass", r.pass()}};
}

StretchReport check_all_pairs(const DecrementalApsp& algo, const BoundSpec& bound, const SweepOptions& opts,
                              StretchReport report) {
    const DynamicGraph& g = algo.graph();
    const auto dist = exact_apsp(g);
    DistanceMatrix heaviest;
    if (bound.kind == BoundSpec::Kind::MixedWeight) {
        heaviest = bottleneck_weights(g);
    }
    const std::size_t version = g.version();
    CheckpointRecord rec{version, 0, 0, 0.0, 0.0};
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (u == v) {
                continue;
            }
            Estimate est = algo.query(u, v);
            if (opts.perturb) {
                est = opts.perturb(version, u, v, est);
            }
            const Weight d = dist.at(u, v);
            ++rec.pairs_checked;
            double upper = kEstimateInfinity;
            bool ok = true;
            if (d >= kInfinity) {
                ok = std::isinf(est);
            } else {
                const auto dd = static_cast<double>(d);
                switch (bound.kind) {
                case BoundSpec::Kind::Multiplicative: upper = bound.alpha * dd + bound.beta; break;
                case BoundSpec::Kind::MixedWeight:
                    upper = bound.alpha * dd + static_cast<double>(heaviest.at(u, v));
                    break;
                case BoundSpec::Kind::Additive:
                    if (d <= bound.within) {
                        upper = dd + bound.beta;
                    }
                    break;
                }
                ok = est >= dd && est <= upper;
                if (std::isfinite(est)) {
                    rec.max_additive = std::max(rec.max_additive, est - dd);
                    if (d > 0) {
                        rec.max_ratio = std::max(rec.max_ratio, est / dd);
                    }
                }
            }
            if (!ok) {
                ++rec.violations;
                ++report.total_violations;
                if (report.violations.size() < opts.keep) {
                    report.violations.push_back({version, u, v, d, est, upper});
                }
            }
        }
    }
    report.checkpoints.push_back(rec);
    return report;
}

StretchReport sweep(DecrementalApsp& algo, const std::vector<StreamItem>& stream, const BoundSpec& bound,
                    const SweepOptions& opts) {
    StretchReport report;
    if (opts.dense) {
        report = check_all_pairs(algo, bound, opts, std::move(report));
    }
    for (const auto& item : stream) {
        if (item.is_query) {
            if (!opts.dense) {
                report = check_all_pairs(algo, bound, opts, std::move(report));
            }
            continue;
        }
        algo.apply(item.update);
        if (opts.dense) {
            report = check_all_pairs(algo, bound, opts, std::move(report));
        }
    }
    return report;
}

} // namespace decapsp
