// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "decapsp/types.hpp"

namespace decapsp {

using ReverseIndex = std::unordered_map<std::uint64_t, std::unordered_set<NodeId>>;

inline void index_add(ReverseIndex& idx, std::uint64_t key, NodeId id) { idx[key].insert(id); }

inline void index_remove(ReverseIndex& idx, std::uint64_t key, NodeId id) {
    auto it = idx.find(key);
    if (it == idx.end()) {
        return;
    }
    it->second.erase(id);
    if (it->second.empty()) {
        idx.erase(it);
    }
}

inline bool index_has(const ReverseIndex& idx, std::uint64_t key, NodeId id) {
    auto it = idx.find(key);
    return it != idx.end() && it->second.contains(id);
}

// Copy, since callers mutate the index while walking the result.
inline std::vector<NodeId> index_get(const ReverseIndex& idx, std::uint64_t key) {
    auto it = idx.find(key);
    if (it == idx.end()) {
        return {};
    }
    return {it->second.begin(), it->second.end()};
}

inline std::size_t index_total(const ReverseIndex& idx) {
    std::size_t total = 0;
    for (const auto& [_, s] : idx) {
        total += s.size();
    }
    return total;
}

inline std::vector<NodeId> unique_sorted(std::vector<NodeId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline std::vector<NodeId> sorted(const std::unordered_set<NodeId>& s) {
    std::vector<NodeId> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace decapsp
