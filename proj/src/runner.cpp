// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "decapsp/additive.hpp"
#include "decapsp/apsp_mixed.hpp"
#include "decapsp/apsp_mult.hpp"
#include "decapsp/reduction.hpp"
#include "decapsp/rounding.hpp"
#include "decapsp/workload.hpp"

namespace decapsp {

const std::vector<std::string>& algorithm_tags() {
    static const std::vector<std::string> tags{"mult", "mixed", "unweighted-mult", "additive", "static-2"};
    return tags;
}

void validate(const RunConfig& cfg) {
    const auto& tags = algorithm_tags();
    if (std::find(tags.begin(), tags.end(), cfg.algo) == tags.end()) {
        throw ConfigError("unknown algorithm '" + cfg.algo + "'");
    }
    if (cfg.p < 0.0 || cfg.p > 1.0) {
        throw ConfigError("p must lie in (0,1]");
    }
    if (cfg.algo != "additive" && cfg.algo != "static-2" && !(cfg.eps > 0.0 && cfg.eps < 1.0)) {
        throw ConfigError("eps must lie in (0,1)");
    }
    if (cfg.algo == "mixed" && cfg.tau < 1) {
        throw ConfigError("mixed requires --tau >= 1");
    }
    if (cfg.algo == "additive") {
        if (cfg.k < 2) {
            throw ConfigError("additive requires --k >= 2");
        }
        if (cfg.d < 1) {
            throw ConfigError("additive requires --d >= 1");
        }
        if (!(cfg.c > 0.0)) {
            throw ConfigError("c must be positive");
        }
    }
}

double resolved_p(const RunConfig& cfg, const DynamicGraph& g) {
    if (cfg.p > 0.0) {
        return cfg.p;
    }
    const auto n = static_cast<double>(std::max<NodeId>(g.node_count(), 1));
    const auto m = static_cast<double>(std::max<std::size_t>(g.edge_count(), 1));
    if (cfg.algo == "mixed" || cfg.algo == "unweighted-mult") {
        return std::min(1.0, std::pow(m, -0.25));
    }
    return std::min(1.0, std::sqrt(n / m));
}

std::unique_ptr<DecrementalApsp> make_algorithm(const RunConfig& cfg, const DynamicGraph& g) {
    validate(cfg);
    if (cfg.algo == "mult") {
        return std::make_unique<ApspMult>(g, MultConfig{resolved_p(cfg, g), cfg.eps, cfg.seed});
    }
    if (cfg.algo == "mixed") {
        return std::make_unique<ApspMixed>(g, MixedConfig{resolved_p(cfg, g), cfg.tau, cfg.eps, cfg.seed});
    }
    if (cfg.algo == "unweighted-mult") {
        UnweightedMultConfig u;
        u.p = cfg.p;
        u.tau = cfg.tau;
        u.eps = cfg.eps;
        u.seed = cfg.seed;
        if (u.p <= 0.0) {
            const SubdividedGraph probe(g, u.k);
            u.p = std::min(1.0, std::pow(static_cast<double>(std::max<std::size_t>(probe.graph().edge_count(), 1)), -0.25));
        }
        return std::make_unique<UnweightedMult>(g, u);
    }
    if (cfg.algo == "additive") {
        return std::make_unique<AdditiveApsp>(g, AdditiveConfig{cfg.k, cfg.d, cfg.c, cfg.seed});
    }
    return std::make_unique<StaticTwoApsp>(g, resolved_p(cfg, g), cfg.seed);
}

BoundSpec bound_for(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.algo == "mult") {
        return BoundSpec::multiplicative(2.0 + cfg.eps);
    }
    if (cfg.algo == "mixed") {
        return BoundSpec::mixed_weight(2.0 + cfg.eps);
    }
    if (cfg.algo == "unweighted-mult") {
        // inner structure is (2+eps, 1) on the subdivided graph; one subdivision node per edge
        return BoundSpec::multiplicative(2.0 + 3.0 * cfg.eps);
    }
    if (cfg.algo == "additive") {
        return BoundSpec::additive(cfg.d, cfg.k);
    }
    return BoundSpec::multiplicative(2.0);
}

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j{{"algo", cfg.algo}, {"eps", cfg.eps}, {"seed", cfg.seed}, {"dense", cfg.dense}};
    if (cfg.p > 0.0) {
        j["p"] = cfg.p;
    }
    if (cfg.tau > 0) {
        j["tau"] = cfg.tau;
    }
    if (cfg.algo == "additive") {
        j["k"] = cfg.k;
        j["d"] = cfg.d;
        j["c"] = cfg.c;
    }
    return j;
}

nlohmann::json to_json(const Counters& c) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : c) {
        j[k] = v;
    }
    return j;
}

namespace {
using Clock = std::chrono::steady_clock;
double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}
} // namespace

RunResult run_stream(const RunConfig& cfg, const DynamicGraph& g, const std::vector<StreamItem>& stream) {
    RunResult r;
    auto t0 = Clock::now();
    auto algo = make_algorithm(cfg, g);
    r.init_ms = ms_since(t0);
    for (const auto& item : stream) {
        if (item.is_query) {
            r.answers.push_back({algo->graph().version(), item.qu, item.qv, algo->query(item.qu, item.qv)});
            continue;
        }
        t0 = Clock::now();
        algo->apply(item.update);
        r.update_ms += ms_since(t0);
        ++r.updates;
    }
    r.counters = algo->counters();
    return r;
}

nlohmann::json to_json(const RunResult& r) {
    nlohmann::json answers = nlohmann::json::array();
    for (const auto& a : r.answers) {
        answers.push_back({{"version", a.version},
                           {"u", a.u},
                           {"v", a.v},
                           {"estimate", std::isinf(a.estimate) ? nlohmann::json(nullptr) : nlohmann::json(a.estimate)}});
    }
    return {{"updates", r.updates},
            {"answers", answers},
            {"counters", to_json(r.counters)},
            {"timing", {{"init_ms", r.init_ms}, {"update_ms", r.update_ms}}}};
}

std::int64_t rebuild_bound(double eps, NodeId n, Weight w) {
    return ceil_log(eps / 3.0, static_cast<double>(n) * static_cast<double>(w)) + 1;
}

std::int64_t neighbor_min_change_bound(double eps, NodeId n, Weight w) {
    const std::int64_t l = ceil_log(eps / 3.0, static_cast<double>(n) * static_cast<double>(w));
    return l * l;
}

BenchRow bench_one(const RunConfig& cfg, NodeId n, double density, Weight max_weight, std::uint64_t workload_seed) {
    WorkloadConfig wc;
    wc.n = n;
    wc.density = density;
    wc.max_weight = max_weight;
    wc.seed = workload_seed;
    wc.checkpoint_every = 0;
    const Workload w = generate_workload(wc);
    const RunResult r = run_stream(cfg, w.graph, w.stream);

    BenchRow row{n, w.graph.edge_count(), r.update_ms, r.counters, -1, -1, true};
    // Rebuild and heap bounds are stated for the graph the bunches live on.
    NodeId bn = n;
    if (cfg.algo == "unweighted-mult") {
        const SubdividedGraph sub(w.graph, 1);
        bn = sub.graph().node_count();
    }
    auto get = [&](const char* key) {
        auto it = r.counters.find(key);
        return it == r.counters.end() ? std::int64_t{0} : it->second;
    };
    if (r.counters.contains("max_node_rebuilds")) {
        row.rebuild_limit = rebuild_bound(cfg.eps, bn, w.graph.weight_bound());
        row.within_bounds = row.within_bounds && get("max_node_rebuilds") <= row.rebuild_limit;
    }
    if (r.counters.contains("max_neighbor_min_changes")) {
        row.min_change_limit = neighbor_min_change_bound(cfg.eps, bn, w.graph.weight_bound());
        row.within_bounds = row.within_bounds && get("max_neighbor_min_changes") <= row.min_change_limit;
    }
    return row;
}

namespace {
const std::vector<std::string> kCsvCounters{"max_node_rebuilds",        "bunch_rebuilds", "max_neighbor_min_changes",
                                            "heap_touches",             "level_increases", "promotions",
                                            "heavy_nodes",              "estar_additions", "ei_additions"};
}

std::string bench_csv_header() {
    std::ostringstream out;
    out << "schema_version,n,m,update_ms";
    for (const auto& c : kCsvCounters) {
        out << ',' << c;
    }
    out << ",rebuild_limit,min_change_limit,within_bounds";
    return out.str();
}

std::string bench_csv_row(const BenchRow& row) {
    std::ostringstream out;
    out << 1 << ',' << row.n << ',' << row.m << ',' << row.update_ms;
    for (const auto& c : kCsvCounters) {
        auto it = row.counters.find(c);
        out << ',';
        if (it != row.counters.end()) {
            out << it->second;
        }
    }
    out << ',' << row.rebuild_limit << ',' << row.min_change_limit << ',' << (row.within_bounds ? "true" : "false");
    return out.str();
}

} // namespace decapsp
