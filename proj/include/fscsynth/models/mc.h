#pragma once

#include <vector>

#include "fscsynth/models/state_set.h"

namespace fscsynth {

/// Markov chain with state rewards. Rows are sorted by target and contain no zero entries.
template <typename V>
struct Mc {
    using Row = std::vector<Transition<V>>;

    std::vector<Row> rows;
    StateId initial = 0;
    StateSet goal;
    StateSet bad;
    // Empty when the chain carries no rewards.
    std::vector<V> rewards;

    std::size_t numStates() const { return rows.size(); }
    bool hasRewards() const { return !rewards.empty(); }
    V reward(StateId s) const { return rewards.empty() ? V(0) : rewards[s]; }

    friend bool operator==(Mc const&, Mc const&) = default;
};

template <typename To, typename From, typename Convert>
Mc<To> convertMc(Mc<From> const& mc, Convert convert) {
    Mc<To> out;
    out.initial = mc.initial;
    out.goal = mc.goal;
    out.bad = mc.bad;
    out.rows.resize(mc.rows.size());
    for (std::size_t s = 0; s < mc.rows.size(); ++s) {
        for (auto const& t : mc.rows[s]) out.rows[s].push_back({t.target, convert(t.value)});
    }
    for (auto const& r : mc.rewards) out.rewards.push_back(convert(r));
    return out;
}

inline Mc<double> toDoubleMc(Mc<Rational> const& mc) {
    return convertMc<double>(mc, [](Rational const& v) { return v.get_d(); });
}

}  // namespace fscsynth
