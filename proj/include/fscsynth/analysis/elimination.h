#pragma once

#include "fscsynth/models/pmc.h"
#include "fscsynth/models/rational_function.h"
#include "fscsynth/models/specification.h"

namespace fscsynth {

enum class EliminationOrder {
    Degree,   // smallest in-degree times out-degree first, recomputed after each step
    Forward,  // ascending state id
    Reverse,  // descending state id
};

struct ClosedForm {
    RationalFunction value;
    /// Expected reward diverges for every graph-preserving instantiation.
    bool infinite = false;
};

/// Reach-avoid probability "not bad until goal" as a rational function, valid for every
/// graph-preserving well-defined instantiation. Pass an empty `bad` for plain reachability.
RationalFunction stateEliminate(Pmc const& pmc, StateSet const& goal, StateSet const& bad,
                                EliminationOrder order = EliminationOrder::Degree);

/// Value of `spec` at the initial state, for probability or expected-reward specifications.
ClosedForm closedForm(Pmc const& pmc, Specification const& spec, EliminationOrder order = EliminationOrder::Degree);

}  // namespace fscsynth
