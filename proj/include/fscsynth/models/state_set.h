#pragma once

#include <algorithm>
#include <vector>

#include "fscsynth/models/rational.h"

namespace fscsynth {

/// Sorted, duplicate-free list of state ids.
using StateSet = std::vector<StateId>;

inline void normalize(StateSet& set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

inline bool contains(StateSet const& set, StateId s) { return std::binary_search(set.begin(), set.end(), s); }

inline std::vector<char> toMask(StateSet const& set, std::size_t numStates) {
    std::vector<char> mask(numStates, 0);
    for (StateId s : set) mask[s] = 1;
    return mask;
}

inline StateSet fromMask(std::vector<char> const& mask) {
    StateSet set;
    for (std::size_t s = 0; s < mask.size(); ++s) {
        if (mask[s]) set.push_back(static_cast<StateId>(s));
    }
    return set;
}

template <typename V>
struct Transition {
    StateId target;
    V value;

    friend bool operator==(Transition const&, Transition const&) = default;
};

/// Merges duplicate targets, drops zero entries and sorts by target.
template <typename V>
void canonicalizeRow(std::vector<Transition<V>>& row) {
    std::sort(row.begin(), row.end(), [](auto const& a, auto const& b) { return a.target < b.target; });
    std::vector<Transition<V>> merged;
    for (auto& t : row) {
        if (!merged.empty() && merged.back().target == t.target) {
            merged.back().value += t.value;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](auto const& t) { return t.value == V(0); });
    row = std::move(merged);
}

}  // namespace fscsynth
