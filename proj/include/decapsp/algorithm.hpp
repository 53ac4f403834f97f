// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "decapsp/graph.hpp"

namespace decapsp {

using Counters = std::map<std::string, std::int64_t>;

// Common surface of the decremental distance structures so the CLI and verifier can drive them.
class DecrementalApsp {
  public:
    virtual ~DecrementalApsp() = default;

    virtual std::string name() const = 0;
    // Current graph in the caller's node ids.
    virtual const DynamicGraph& graph() const = 0;
    virtual void apply(const UpdateEvent& e) = 0;
    virtual Estimate query(NodeId u, NodeId v) const = 0;
    virtual Counters counters() const = 0;
};

} // namespace decapsp
