#pragma once

#include <cstddef>
#include <vector>

namespace graybox {

/// Set of integers in [0, capacity) with O(1) insert, erase, membership and
/// uniform sampling by position.
class IndexedSet {
public:
    IndexedSet() = default;
    explicit IndexedSet(std::size_t capacity) : position_(capacity, kAbsent) {}

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    bool contains(std::size_t v) const noexcept { return position_[v] != kAbsent; }
    std::size_t at(std::size_t i) const noexcept { return items_[i]; }
    const std::vector<std::size_t>& items() const noexcept { return items_; }

    void insert(std::size_t v) {
        if (contains(v)) return;
        position_[v] = items_.size();
        items_.push_back(v);
    }

    void erase(std::size_t v) {
        if (!contains(v)) return;
        const std::size_t slot = position_[v];
        items_[slot] = items_.back();
        position_[items_[slot]] = slot;
        items_.pop_back();
        position_[v] = kAbsent;
    }

    void assign(std::size_t v, bool member) {
        if (member)
            insert(v);
        else
            erase(v);
    }

    std::size_t min() const noexcept {
        std::size_t best = items_.front();
        for (auto v : items_)
            if (v < best) best = v;
        return best;
    }

private:
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> items_;
    std::vector<std::size_t> position_;
};

}  // namespace graybox
