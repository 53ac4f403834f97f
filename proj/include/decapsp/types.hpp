// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace decapsp {

using NodeId = std::int32_t;
using Weight = std::int64_t;

// Exact distances saturate at kInfinity so sums of two infinite values never wrap.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

// Estimates are doubles; an unreachable pair is reported as +inf.
using Estimate = double;
inline constexpr Estimate kEstimateInfinity = std::numeric_limits<double>::infinity();

inline constexpr Weight saturating_add(Weight a, Weight b) {
    if (a >= kInfinity || b >= kInfinity) {
        return kInfinity;
    }
    const Weight s = a + b;
    return s >= kInfinity ? kInfinity : s;
}

inline Estimate to_estimate(Weight w) { return w >= kInfinity ? kEstimateInfinity : static_cast<Estimate>(w); }

inline std::uint64_t pair_key(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

inline std::uint64_t unordered_pair_key(NodeId a, NodeId b) { return a < b ? pair_key(a, b) : pair_key(b, a); }

inline NodeId key_first(std::uint64_t k) { return static_cast<NodeId>(k >> 32); }
inline NodeId key_second(std::uint64_t k) { return static_cast<NodeId>(k & 0xffffffffu); }

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class EdgeNotFound : public Error {
  public:
    EdgeNotFound(NodeId u, NodeId v)
        : Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not in the graph"), u(u), v(v) {}
    NodeId u;
    NodeId v;
};

class DuplicateEdge : public Error {
  public:
    DuplicateEdge(NodeId u, NodeId v)
        : Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} already exists"), u(u), v(v) {}
    NodeId u;
    NodeId v;
};

class MonotonicityViolation : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

class OracleTooLarge : public Error {
  public:
    using Error::Error;
};

} // namespace decapsp
