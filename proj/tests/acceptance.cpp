// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "decapsp/additive.hpp"
#include "decapsp/apsp_mixed.hpp"
#include "decapsp/apsp_mult.hpp"
#include "decapsp/oracle.hpp"
#include "decapsp/reduction.hpp"
#include "decapsp/runner.hpp"
#include "decapsp/workload.hpp"
#include "properties.hpp"

using namespace decapsp;

namespace {

// Stretch factor shared by the multiplicative and mixed criteria (2 + eps with eps = 0.9).
constexpr double kEps = 0.9;
constexpr double kAlpha = 2.0 + kEps;
// Sampling probability used alongside the per-algorithm default so the heap layers carry load.
constexpr double kSmallP = 0.15;
// Fraction of seeds that must meet each size bound.
constexpr double kSizeQuorum = 0.95;
constexpr int kSizeSeeds = 50;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
};

struct Workloads {
    std::vector<Workload> items;
    std::vector<std::string> labels;
};

Workload make_workload(NodeId n, double density, Weight w, std::uint64_t seed) {
    WorkloadConfig cfg;
    cfg.n = n;
    cfg.density = density;
    cfg.max_weight = w;
    cfg.seed = seed;
    cfg.checkpoint_every = 1;
    return generate_workload(cfg);
}

// 20 workloads: n in {32, 64} x W in {1, 10} x 5 seeds, density 0.25, full deletion sequences.
const Workloads& stretch_workloads() {
    static const Workloads all = [] {
        Workloads out;
        std::uint64_t seed = 1000;
        for (const NodeId n : {32, 64}) {
            for (const Weight w : {1, 10}) {
                for (int i = 0; i < 5; ++i) {
                    out.items.push_back(make_workload(n, 0.25, w, ++seed));
                    out.labels.push_back("n=" + std::to_string(n) + " W=" + std::to_string(w) + " seed=" +
                                         std::to_string(seed));
                }
            }
        }
        return out;
    }();
    return all;
}

// Laziness counters gathered from every mult and mixed run.
struct LazinessLog {
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::int64_t worst_rebuilds = 0;
    std::int64_t worst_min_changes = 0;
    std::string first_failure;

    void record(const std::string& label, const Counters& c, NodeId n, Weight w) {
        ++runs;
        const auto rebuilds = c.at("max_node_rebuilds");
        const auto limit = rebuild_bound(kEps, n, w);
        worst_rebuilds = std::max(worst_rebuilds, rebuilds);
        bool ok = rebuilds <= limit;
        if (auto it = c.find("max_neighbor_min_changes"); it != c.end()) {
            worst_min_changes = std::max(worst_min_changes, it->second);
            ok = ok && it->second <= neighbor_min_change_bound(kEps, n, w);
        }
        if (!ok) {
            ++failures;
            if (first_failure.empty()) {
                first_failure = label;
            }
        }
    }
};

LazinessLog& laziness() {
    static LazinessLog log;
    return log;
}

std::string fmt(double x, int digits = 3) {
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
}

struct SweepTally {
    std::size_t runs = 0;
    std::size_t violations = 0;
    double max_ratio = 0.0;
    double max_additive = 0.0;
    std::string first_failure;

    void add(const std::string& label, const StretchReport& r) {
        ++runs;
        violations += r.total_violations;
        for (const auto& cp : r.checkpoints) {
            max_ratio = std::max(max_ratio, cp.max_ratio);
            max_additive = std::max(max_additive, cp.max_additive);
        }
        if (!r.pass() && first_failure.empty()) {
            first_failure = label;
        }
    }
    Outcome outcome(const std::string& extra = "") const {
        Outcome o;
        o.pass = violations == 0 && runs > 0;
        o.detail = std::to_string(runs) + " runs, " + std::to_string(violations) + " violations, max ratio " +
                   fmt(max_ratio) + ", max additive " + fmt(max_additive) + extra;
        if (!first_failure.empty()) {
            o.detail += ", first failure " + first_failure;
        }
        return o;
    }
};

SweepOptions dense() {
    SweepOptions o;
    o.dense = true;
    return o;
}

Outcome multiplicative_stretch() {
    SweepTally tally;
    const auto& ws = stretch_workloads();
    for (std::size_t i = 0; i < ws.items.size(); ++i) {
        const auto& w = ws.items[i];
        RunConfig cfg;
        cfg.algo = "mult";
        cfg.eps = kEps;
        cfg.seed = 7 + i;
        for (const double p : {resolved_p(cfg, w.graph), kSmallP}) {
            ApspMult a(w.graph, {p, kEps, cfg.seed});
            const auto label = ws.labels[i] + " p=" + fmt(p, 2);
            tally.add(label, sweep(a, w.stream, BoundSpec::multiplicative(kAlpha), dense()));
            laziness().record(label, a.counters(), w.graph.node_count(), w.graph.weight_bound());
        }
    }
    return tally.outcome();
}

Outcome mixed_stretch() {
    SweepTally tally;
    const auto& ws = stretch_workloads();
    for (std::size_t i = 0; i < ws.items.size(); ++i) {
        const auto& w = ws.items[i];
        const auto root_m =
            static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(w.graph.edge_count()))));
        RunConfig cfg;
        cfg.algo = "mixed";
        cfg.tau = 4;
        cfg.seed = 11 + i;
        for (const std::int64_t tau : {std::int64_t{4}, root_m}) {
            for (const double p : {resolved_p(cfg, w.graph), kSmallP}) {
                ApspMixed a(w.graph, {p, tau, kEps, cfg.seed});
                const auto label = ws.labels[i] + " tau=" + std::to_string(tau) + " p=" + fmt(p, 2);
                tally.add(label, sweep(a, w.stream, BoundSpec::mixed_weight(kAlpha), dense()));
                laziness().record(label, a.counters(), w.graph.node_count(), w.graph.weight_bound());
            }
        }
    }
    return tally.outcome();
}

Outcome unweighted_reduction() {
    constexpr double kInnerEps = 0.1;
    constexpr int kPairs = 100;
    SweepTally tally;
    std::size_t identity_checked = 0;
    std::size_t identity_failed = 0;
    std::uint64_t seed = 2000;
    for (const NodeId n : {24, 32, 40, 48}) {
        for (int rep = 0; rep < 2; ++rep) {
            const auto w = make_workload(n, 0.3, 1, ++seed);
            const SubdividedGraph sub(w.graph, 1);
            const auto d = exact_apsp(w.graph);
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<NodeId> pick(0, n - 1);
            for (int i = 0; i < kPairs; ++i) {
                const NodeId u = pick(rng);
                const NodeId v = pick(rng);
                const Weight expanded = single_source(sub.graph(), u)[static_cast<std::size_t>(v)];
                const Weight want = d.at(u, v) >= kInfinity ? kInfinity : 2 * d.at(u, v);
                ++identity_checked;
                identity_failed += expanded == want ? 0 : 1;
            }
            RunConfig cfg;
            cfg.algo = "unweighted-mult";
            const double p = resolved_p(cfg, w.graph);
            UnweightedMult a(w.graph, {1, p, 0, kInnerEps, seed});
            const auto label = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
            tally.add(label, sweep(a, w.stream, BoundSpec::multiplicative(2.0 + 3.0 * kInnerEps), dense()));
        }
    }
    auto o = tally.outcome(", identity " + std::to_string(identity_checked - identity_failed) + "/" +
                           std::to_string(identity_checked));
    o.pass = o.pass && identity_failed == 0;
    return o;
}

Outcome additive_stretch() {
    SweepTally tally;
    std::size_t structure_failures = 0;
    std::uint64_t seed = 3000;
    for (const int k : {2, 3}) {
        for (const Weight d : {4, 8}) {
            for (const double c : {2.0, 0.3}) {
                for (int rep = 0; rep < 2; ++rep) {
                    const auto w = make_workload(64, 0.15, 1, ++seed);
                    AdditiveApsp a(w.graph, {k, d, c, seed});
                    const auto label = "k=" + std::to_string(k) + " d=" + std::to_string(d) + " c=" + fmt(c, 1) +
                                       " seed=" + std::to_string(seed);
                    tally.add(label, sweep(a, w.stream, BoundSpec::additive(d, k), dense()));
                    try {
                        a.check_structure();
                    } catch (const std::logic_error&) {
                        ++structure_failures;
                    }
                }
            }
        }
    }
    auto o = tally.outcome(", structure failures " + std::to_string(structure_failures));
    o.pass = o.pass && structure_failures == 0;
    return o;
}

Outcome es_tree_invariants() {
    constexpr int kTrials = 1000;
    int failed = 0;
    std::string first;
    for (int mode = 0; mode < 2; ++mode) {
        for (int s = 1; s <= kTrials; ++s) {
            const auto r = testing::es_tree_trial(static_cast<std::uint64_t>(s), mode == 0);
            if (!r.ok) {
                ++failed;
                if (first.empty()) {
                    first = (mode == 0 ? "mixed ops seed " : "decremental seed ") + std::to_string(s) + ": " +
                            r.failure;
                }
            }
        }
    }
    Outcome o;
    o.pass = failed == 0;
    o.detail = std::to_string(kTrials) + " interleaved + " + std::to_string(kTrials) + " decremental trials, " +
               std::to_string(failed) + " failures" + (first.empty() ? "" : ", first " + first);
    return o;
}

Outcome laziness_counters() {
    // Bench ladder on top of the counters already logged by the stretch runs.
    for (const NodeId n : {32, 64, 128}) {
        for (const Weight w : {1, 10}) {
            RunConfig cfg;
            cfg.algo = "mult";
            cfg.eps = kEps;
            cfg.p = kSmallP;
            const auto row = bench_one(cfg, n, 0.1, w, 77);
            laziness().record("bench n=" + std::to_string(n) + " W=" + std::to_string(w), row.counters, n, w);
            if (!row.within_bounds) {
                ++laziness().failures;
            }
        }
    }
    const auto& log = laziness();
    Outcome o;
    o.pass = log.failures == 0 && log.runs > 0;
    o.detail = std::to_string(log.runs) + " runs, " + std::to_string(log.failures) +
               " over bound, worst per-node rebuilds " + std::to_string(log.worst_rebuilds) +
               ", worst rounded-minimum changes " + std::to_string(log.worst_min_changes);
    if (!log.first_failure.empty()) {
        o.detail += ", first failure " + log.first_failure;
    }
    return o;
}

std::string quorum(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

Outcome size_bounds() {
    const int need = static_cast<int>(std::ceil(kSizeQuorum * kSizeSeeds));

    // Median bunch size, n = 128, p = 0.25.
    int bunch_ok = 0;
    {
        const NodeId n = 128;
        const double p = 0.25;
        const double limit = 8.0 * std::log(n) / p;
        for (int s = 1; s <= kSizeSeeds; ++s) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(4000 + s));
            const auto g = random_graph(n, 0.1, 1, rng);
            const BunchEngine b(g, {p, kEps, static_cast<std::uint64_t>(s)});
            std::vector<std::size_t> sizes;
            for (NodeId v = 0; v < n; ++v) {
                sizes.push_back(b.bunch(v).size());
            }
            std::nth_element(sizes.begin(), sizes.begin() + n / 2, sizes.end());
            bunch_ok += static_cast<double>(sizes[static_cast<std::size_t>(n / 2)]) <= limit ? 1 : 0;
        }
    }

    // Heavy set after a full deletion sweep, G(64, 0.2), p = 0.25, tau = 8.
    int heavy_ok = 0;
    {
        const NodeId n = 64;
        const double p = 0.25;
        const std::int64_t tau = 8;
        for (int s = 1; s <= kSizeSeeds; ++s) {
            const auto w = make_workload(n, 0.2, 1, static_cast<std::uint64_t>(5000 + s));
            ApspMixed a(w.graph, {p, tau, kEps, static_cast<std::uint64_t>(s)});
            for (const auto& item : w.stream) {
                if (!item.is_query) {
                    a.apply(item.update);
                }
            }
            const double nw = static_cast<double>(n) * static_cast<double>(w.graph.weight_bound());
            const double limit = 8.0 * (n / (p * static_cast<double>(tau))) * std::log(nw) / std::log1p(kEps / 3.0);
            heavy_ok += static_cast<double>(a.heavy_nodes().size()) <= limit ? 1 : 0;
        }
    }

    // Level-set and star loads over full deletion sequences, c = 2, n = 128, density 0.5.
    int level_ok = 0;
    int star_ok = 0;
    {
        const NodeId n = 128;
        for (int s = 1; s <= kSizeSeeds; ++s) {
            const auto w = make_workload(n, 0.5, 1, static_cast<std::uint64_t>(6000 + s));
            const auto m = static_cast<double>(w.graph.edge_count());
            bool levels_fine = true;
            bool star_fine = true;
            for (const int k : {2, 3}) {
                const HittingHierarchy h(n, w.graph.edge_count(), k, 2.0, static_cast<std::uint64_t>(s));
                auto g = w.graph;
                EdgeSets sets(g, h);
                for (const auto& item : w.stream) {
                    if (!item.is_query) {
                        g.apply_update(item.update);
                        sets.on_delete(g, item.update.u, item.update.v);
                    }
                }
                for (int i = 2; i <= k; ++i) {
                    const double limit = 4.0 * n * h.threshold(i - 1);
                    levels_fine = levels_fine && static_cast<double>(sets.level_additions(i)) <= limit;
                }
                const double ln = std::log(static_cast<double>(n));
                const double inv = 1.0 / k;
                const double limit = 4.0 * k * std::pow(n, 1.0 - inv) * std::pow(m, inv) * std::pow(ln, 1.0 - inv);
                star_fine = star_fine && static_cast<double>(sets.star_additions()) <= limit;
            }
            level_ok += levels_fine ? 1 : 0;
            star_ok += star_fine ? 1 : 0;
        }
    }

    Outcome o;
    o.pass = bunch_ok >= need && heavy_ok >= need && level_ok >= need && star_ok >= need;
    o.detail = "median bunch " + quorum(bunch_ok, kSizeSeeds) + ", heavy set " + quorum(heavy_ok, kSizeSeeds) +
               ", level sets " + quorum(level_ok, kSizeSeeds) + ", star set " + quorum(star_ok, kSizeSeeds) +
               " (need " + std::to_string(need) + ")";
    return o;
}

Outcome static_baseline() {
    std::size_t violations = 0;
    std::size_t pairs = 0;
    double max_ratio = 0.0;
    for (int s = 1; s <= 20; ++s) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(7000 + s));
        const auto g = random_graph(48, 0.2, s % 2 == 0 ? 10 : 1, rng);
        const auto d = exact_apsp(g);
        const auto est = static_two_apsp(g, std::sqrt(48.0 / static_cast<double>(g.edge_count())),
                                         static_cast<std::uint64_t>(s));
        for (NodeId u = 0; u < 48; ++u) {
            for (NodeId v = 0; v < 48; ++v) {
                ++pairs;
                const Weight dv = d.at(u, v);
                const Estimate e = est.at(u, v);
                if (dv >= kInfinity) {
                    violations += std::isinf(e) ? 0 : 1;
                    continue;
                }
                const double dd = static_cast<double>(dv);
                violations += (e < dd || e > 2.0 * dd) ? 1 : 0;
                if (dv > 0) {
                    max_ratio = std::max(max_ratio, e / dd);
                }
            }
        }
    }
    Outcome o;
    o.pass = violations == 0;
    o.detail = "20 graphs, " + std::to_string(pairs) + " pairs, " + std::to_string(violations) +
               " violations, max ratio " + fmt(max_ratio);
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "multiplicative stretch", multiplicative_stretch},
        {2, "mixed stretch", mixed_stretch},
        {3, "unweighted reduction", unweighted_reduction},
        {4, "additive stretch", additive_stretch},
        {5, "monotone tree invariants", es_tree_invariants},
        {6, "laziness counters", laziness_counters},
        {7, "size bounds", size_bounds},
        {8, "static baseline", static_baseline},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
