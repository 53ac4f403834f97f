// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "decapsp/graph.hpp"

namespace decapsp {

struct WorkloadConfig {
    NodeId n = 32;
    double density = 0.25;
    Weight max_weight = 1;
    double deletion_fraction = 1.0;
    std::uint64_t seed = 1;
    std::size_t checkpoint_every = 1; // a query line after this many deletions; 0 for none
};

struct Workload {
    DynamicGraph graph;
    std::vector<StreamItem> stream;
};

// Erdos-Renyi graph G(n, density) with weights uniform in [1, max_weight].
DynamicGraph random_graph(NodeId n, double density, Weight max_weight, std::mt19937_64& rng);

// Random graph plus a shuffled deletion order. Everything is drawn from the workload seed
// alone, before any algorithm samples.
Workload generate_workload(const WorkloadConfig& cfg);

// Raises the graph's weight bound to cover every increase in the stream.
void fit_weight_bound(DynamicGraph& g, const std::vector<StreamItem>& stream);

} // namespace decapsp
