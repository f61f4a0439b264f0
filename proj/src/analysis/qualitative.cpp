#include "fscsynth/analysis/qualitative.h"

#include <deque>

namespace fscsynth {

Graph graphOf(Pmc const& pmc) {
    Graph g(pmc.numStates());
    for (StateId s = 0; s < pmc.numStates(); ++s) {
        for (auto const& t : pmc.rows[s]) {
            if (!t.value.isZero()) g[s].push_back(t.target);
        }
    }
    return g;
}

std::vector<char> backwardReachable(Graph const& g, std::vector<char> const& targets,
                                    std::vector<char> const& through) {
    std::size_t n = g.size();
    Graph reverse(n);
    for (StateId s = 0; s < n; ++s) {
        for (StateId t : g[s]) reverse[t].push_back(s);
    }
    std::vector<char> reached = targets;
    std::deque<StateId> queue;
    for (StateId s = 0; s < n; ++s) {
        if (reached[s]) queue.push_back(s);
    }
    while (!queue.empty()) {
        StateId t = queue.front();
        queue.pop_front();
        for (StateId s : reverse[t]) {
            if (!reached[s] && through[s]) {
                reached[s] = 1;
                queue.push_back(s);
            }
        }
    }
    return reached;
}

QualitativeSets qualitativeSets(Graph const& g, StateSet const& goal, StateSet const& bad) {
    std::size_t n = g.size();
    auto goalMask = toMask(goal, n);
    auto badMask = toMask(bad, n);
    std::vector<char> open(n);
    for (StateId s = 0; s < n; ++s) open[s] = !goalMask[s] && !badMask[s];

    auto canReach = backwardReachable(g, goalMask, open);
    std::vector<char> zero(n);
    for (StateId s = 0; s < n; ++s) zero[s] = !canReach[s];
    // Not almost sure: some path through open states leads into the zero set.
    auto risky = backwardReachable(g, zero, open);
    std::vector<char> one(n);
    for (StateId s = 0; s < n; ++s) one[s] = !risky[s];
    return {fromMask(zero), fromMask(one)};
}

}  // namespace fscsynth
