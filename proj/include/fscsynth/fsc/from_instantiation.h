#pragma once

#include "fscsynth/fsc/fsc.h"
#include "fscsynth/transforms/induced.h"

namespace fscsynth {

/// FSC described by a well-defined instantiation of a standard, substituted or
/// action-restricted induced pMC. Throws ModelError if `u` is not well-defined.
Fsc fscFromInstantiation(Pomdp const& m, InducedPmc const& induced, Instantiation const& u);

/// Instantiation of the induced pMC that reproduces `fsc` (inverse of fscFromInstantiation
/// up to the choices left open where an action has probability zero).
Instantiation instantiationFromFsc(Pomdp const& m, InducedPmc const& induced, Fsc const& fsc);

/// Converts a standard-variant instantiation into the substituted one via r = p * q.
Instantiation substituteInstantiation(InducedPmc const& standard, InducedPmc const& substituted,
                                      Instantiation const& u);

}  // namespace fscsynth
