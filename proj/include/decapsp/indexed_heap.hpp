// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decapsp/types.hpp"

namespace decapsp {

// Binary min-heap over node ids with a reverse position index. Equal keys order by id.
template <typename Key>
class IndexedMinHeap {
  public:
    struct Entry {
        Key key;
        NodeId id;
    };

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    bool contains(NodeId id) const { return pos_.contains(id); }

    const Entry& top() const {
        assert(!heap_.empty());
        return heap_.front();
    }

    Key key(NodeId id) const { return heap_[pos_.at(id)].key; }

    // Inserts or changes the key; returns true if the entry was new.
    bool upsert(NodeId id, Key key) {
        auto it = pos_.find(id);
        if (it == pos_.end()) {
            pos_.emplace(id, heap_.size());
            heap_.push_back({key, id});
            sift_up(heap_.size() - 1);
            return true;
        }
        const std::size_t i = it->second;
        const Key old = heap_[i].key;
        heap_[i].key = key;
        if (less(heap_[i], Entry{old, id})) {
            sift_up(i);
        } else {
            sift_down(i);
        }
        return false;
    }

    bool erase(NodeId id) {
        auto it = pos_.find(id);
        if (it == pos_.end()) {
            return false;
        }
        const std::size_t i = it->second;
        pos_.erase(it);
        const std::size_t last = heap_.size() - 1;
        if (i != last) {
            heap_[i] = heap_[last];
            pos_[heap_[i].id] = i;
            heap_.pop_back();
            sift_up(i);
            sift_down(i);
        } else {
            heap_.pop_back();
        }
        return true;
    }

    Entry pop() {
        Entry e = top();
        erase(e.id);
        return e;
    }

    void clear() {
        heap_.clear();
        pos_.clear();
    }

    const std::vector<Entry>& entries() const { return heap_; }

  private:
    static bool less(const Entry& a, const Entry& b) { return a.key < b.key || (a.key == b.key && a.id < b.id); }

    void swap_at(std::size_t i, std::size_t j) {
        std::swap(heap_[i], heap_[j]);
        pos_[heap_[i].id] = i;
        pos_[heap_[j].id] = j;
    }

    void sift_up(std::size_t i) {
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!less(heap_[i], heap_[parent])) {
                break;
            }
            swap_at(i, parent);
            i = parent;
        }
    }

    void sift_down(std::size_t i) {
        for (;;) {
            const std::size_t l = 2 * i + 1;
            const std::size_t r = l + 1;
            std::size_t best = i;
            if (l < heap_.size() && less(heap_[l], heap_[best])) {
                best = l;
            }
            if (r < heap_.size() && less(heap_[r], heap_[best])) {
                best = r;
            }
            if (best == i) {
                break;
            }
            swap_at(i, best);
            i = best;
        }
    }

    std::vector<Entry> heap_;
    std::unordered_map<NodeId, std::size_t> pos_;
};

} // namespace decapsp
