// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "decapsp/algorithm.hpp"
#include "decapsp/graph.hpp"

namespace decapsp {

template <typename T>
class SquareMatrix {
  public:
    SquareMatrix() = default;
    SquareMatrix(NodeId n, T fill) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    NodeId size() const { return n_; }
    T& at(NodeId u, NodeId v) { return data_[index(u, v)]; }
    const T& at(NodeId u, NodeId v) const { return data_[index(u, v)]; }

  private:
    std::size_t index(NodeId u, NodeId v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    NodeId n_ = 0;
    std::vector<T> data_;
};

using DistanceMatrix = SquareMatrix<Weight>;
using EstimateMatrix = SquareMatrix<Estimate>;

// Largest graph the recompute oracles accept: DECAPSP_ORACLE_CAP if set, else 512.
NodeId oracle_cap();

// Exact distances by BFS (unit weights) or Dijkstra. Throws OracleTooLarge above the cap.
DistanceMatrix exact_apsp(const DynamicGraph& g);
std::vector<Weight> single_source(const DynamicGraph& g, NodeId s);
// Heaviest edge over all shortest u-v paths; 0 on the diagonal and for unreachable pairs.
DistanceMatrix bottleneck_weights(const DynamicGraph& g);

// Static 2-approximation from a sampled pivot set and exact bunches.
EstimateMatrix static_two_apsp(const DynamicGraph& g, double p, std::uint64_t seed);

// Recomputes the static estimates after every update.
class StaticTwoApsp final : public DecrementalApsp {
  public:
    StaticTwoApsp(DynamicGraph g, double p, std::uint64_t seed);

    std::string name() const override { return "static-2"; }
    const DynamicGraph& graph() const override { return graph_; }
    void apply(const UpdateEvent& e) override;
    Estimate query(NodeId u, NodeId v) const override { return est_.at(u, v); }
    Counters counters() const override { return {{"rebuilds", rebuilds_}}; }

  private:
    DynamicGraph graph_;
    double p_;
    std::uint64_t seed_;
    EstimateMatrix est_;
    std::int64_t rebuilds_ = 0;
};

struct BoundSpec {
    enum class Kind { Multiplicative, MixedWeight, Additive };

    Kind kind = Kind::Multiplicative;
    double alpha = 1.0;
    double beta = 0.0;
    Weight within = kInfinity; // additive: upper bound checked only for pairs this close

    static BoundSpec multiplicative(double alpha, double beta = 0.0) { return {Kind::Multiplicative, alpha, beta}; }
    static BoundSpec mixed_weight(double alpha) { return {Kind::MixedWeight, alpha, 0.0}; }
    static BoundSpec additive(Weight d, int k) { return {Kind::Additive, 1.0, 2.0 * (k - 1), d}; }
};

nlohmann::json to_json(const BoundSpec& b);

struct Violation {
    std::size_t version;
    NodeId u;
    NodeId v;
    Weight distance;   // kInfinity when disconnected
    Estimate estimate;
    double bound;      // upper bound; +inf when only the lower bound applies
};

struct CheckpointRecord {
    std::size_t version;
    std::size_t pairs_checked;
    std::size_t violations;
    double max_ratio;    // over connected pairs at positive distance
    double max_additive; // max estimate - distance over connected pairs
};

struct StretchReport {
    std::vector<CheckpointRecord> checkpoints;
    std::vector<Violation> violations; // first few, see SweepOptions::keep
    std::size_t total_violations = 0;

    bool pass() const { return total_violations == 0; }
};

nlohmann::json to_json(const StretchReport& r);

struct SweepOptions {
    bool dense = false; // check after every update instead of only at query lines
    std::size_t keep = 64;
    // Test hook: rewrites an estimate before it is checked.
    std::function<Estimate(std::size_t version, NodeId u, NodeId v, Estimate)> perturb;
};

// Checks all ordered pairs against a fresh exact oracle at every checkpoint.
StretchReport check_all_pairs(const DecrementalApsp& algo, const BoundSpec& bound, const SweepOptions& opts,
                              StretchReport report = {});
StretchReport sweep(DecrementalApsp& algo, const std::vector<StreamItem>& stream, const BoundSpec& bound,
                    const SweepOptions& opts = {});

} // namespace decapsp
