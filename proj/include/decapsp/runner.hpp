// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "decapsp/algorithm.hpp"
#include "decapsp/oracle.hpp"

namespace decapsp {

struct RunConfig {
    std::string algo;        // mult | mixed | unweighted-mult | additive | static-2
    double p = 0.0;          // 0 picks the per-algorithm default
    std::int64_t tau = 0;    // required for mixed
    double eps = 0.9;
    int k = 0;               // required for additive
    Weight d = 0;            // required for additive
    double c = 2.0;
    std::uint64_t seed = 1;
    bool dense = false;
};

const std::vector<std::string>& algorithm_tags();

// Sampling probability the algorithm will use for this graph.
double resolved_p(const RunConfig& cfg, const DynamicGraph& g);
// Throws ConfigError for unknown tags and missing or out-of-range flags.
void validate(const RunConfig& cfg);
std::unique_ptr<DecrementalApsp> make_algorithm(const RunConfig& cfg, const DynamicGraph& g);
BoundSpec bound_for(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const Counters& c);

struct QueryAnswer {
    std::size_t version;
    NodeId u;
    NodeId v;
    Estimate estimate;
};

struct RunResult {
    std::vector<QueryAnswer> answers;
    Counters counters;
    double init_ms = 0.0;
    double update_ms = 0.0;
    std::size_t updates = 0;
};

// Builds the algorithm, replays the stream and answers every query line.
RunResult run_stream(const RunConfig& cfg, const DynamicGraph& g, const std::vector<StreamItem>& stream);
nlohmann::json to_json(const RunResult& r);

// Upper bounds used by bench: per-node bunch rebuilds and rounded neighbor-minimum changes.
std::int64_t rebuild_bound(double eps, NodeId n, Weight w);
std::int64_t neighbor_min_change_bound(double eps, NodeId n, Weight w);

struct BenchRow {
    NodeId n;
    std::size_t m;
    double update_ms;
    Counters counters;
    std::int64_t rebuild_limit;
    std::int64_t min_change_limit; // -1 when the algorithm has no neighbor heaps
    bool within_bounds;
};

BenchRow bench_one(const RunConfig& cfg, NodeId n, double density, Weight max_weight, std::uint64_t workload_seed);
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

} // namespace decapsp
