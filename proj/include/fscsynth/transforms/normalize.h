#pragma once

#include <string>
#include <vector>

#include "fscsynth/models/pmc.h"
#include "fscsynth/models/pomdp.h"

namespace fscsynth {

/// Where a state or observation of a transformed model comes from. Original items
/// have an empty tag; fresh ones are named by (origin, tag, index).
struct Origin {
    std::uint32_t origin;
    std::string tag;
    std::size_t index = 0;

    friend bool operator==(Origin const&, Origin const&) = default;
};

struct Normalized {
    Pomdp pomdp;
    std::vector<Origin> states;
    std::vector<Origin> observations;
};

/// Routes every (s, a) through one intermediate state per successor observation z'.
/// The intermediate state has the single action "_step" (cost 0) and an observation
/// keyed by (a, z'), so memory updates there see the action and the next observation.
Normalized insertIntermediateStates(Pomdp const& m);

/// Peels one action per level until every state has at most two actions; the second
/// action at each level is an auxiliary "rest" move into a state with observation <z, depth>.
Normalized makeBinary(Pomdp const& m);

/// For a binary POMDP: every non-Dirac action of a two-action state is redirected to a
/// fresh auxiliary state (observation per <z, a>) that performs the original branching.
Normalized makeSimple(Pomdp const& m);

/// Simple pMC to simple POMDP: a state whose row is {p, 1-p} gets observation p (the
/// parameter id) and actions "a" (towards p) and "b" (towards 1-p); parameter-free
/// states share one extra observation with the single action "a".
/// Rewards must be affine in the row's parameter. Throws ModelError otherwise or
/// when the pMC is not simple.
Pomdp pmcToPomdp(Pmc const& d);

}  // namespace fscsynth
