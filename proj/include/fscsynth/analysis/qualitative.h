#pragma once

#include <vector>

#include "fscsynth/models/mc.h"
#include "fscsynth/models/pmc.h"

namespace fscsynth {

/// Successor lists over possibly-positive edges.
using Graph = std::vector<std::vector<StateId>>;

template <typename V>
Graph graphOf(Mc<V> const& mc) {
    Graph g(mc.numStates());
    for (StateId s = 0; s < mc.numStates(); ++s) {
        for (auto const& t : mc.rows[s]) {
            if (t.value != V(0)) g[s].push_back(t.target);
        }
    }
    return g;
}

/// Every non-zero polynomial entry counts as an edge.
Graph graphOf(Pmc const& pmc);

struct QualitativeSets {
    StateSet zero;  // goal unreachable (while avoiding bad)
    StateSet one;   // goal reached almost surely (while avoiding bad)
};

/// Reach-avoid sets for "not bad until goal"; pass an empty `bad` for plain reachability.
QualitativeSets qualitativeSets(Graph const& g, StateSet const& goal, StateSet const& bad);

/// States from which `targets` is reachable using only intermediate states in `through`.
std::vector<char> backwardReachable(Graph const& g, std::vector<char> const& targets,
                                    std::vector<char> const& through);

}  // namespace fscsynth
