#pragma once

#include <utility>
#include <vector>

#include "fscsynth/transforms/induced.h"

namespace fscsynth {

/// k-unfolding: state <s, n> has id s * k + n, observation <z, n> has id z * k + n,
/// and action "a@n'" moves the memory to n' deterministically.
struct Unfolding {
    Pomdp pomdp;
    std::size_t numNodes = 1;
    // Original action and memory successor for each unfolded action id.
    std::vector<std::pair<ActionId, NodeId>> actionOrigin;
};

Unfolding unfold(Pomdp const& m, std::size_t k);

/// Maps a well-defined instantiation of the standard induced pMC of (m, k) to the
/// instantiation of the one-node induced pMC of the unfolding with the same chain.
Instantiation mapUnfoldingInstantiation(Unfolding const& unfolding, InducedPmc const& induced,
                                        InducedPmc const& unfoldedInduced, Instantiation const& u);

}  // namespace fscsynth
