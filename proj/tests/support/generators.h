#pragma once

#include <random>

#include "fscsynth/models/pmc.h"
#include "fscsynth/models/pomdp.h"

namespace fscsynth::testing {

using Rng = std::mt19937_64;

struct PomdpShape {
    std::size_t maxStates = 8;
    std::size_t maxActions = 3;
    std::size_t maxObservations = 4;
    bool withRewards = false;
    bool withBad = true;
};

Pomdp randomPomdp(Rng& rng, PomdpShape const& shape = {});

/// Simple pMC in which every declared parameter occurs.
Pmc randomSimplePmc(Rng& rng, std::size_t maxStates = 30, std::size_t maxParams = 6);

/// Group-respecting rational instantiation; interior points have every coordinate,
/// remainders included, strictly positive.
Instantiation randomInstantiation(Pmc const& pmc, Rng& rng, bool interior = true);

/// Canonical num/den.
Rational fraction(long num, long den);

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// Random fraction a/b with 0 < a < b <= denominatorBound.
Rational randomOpenUnit(Rng& rng, unsigned denominatorBound = 20);

}  // namespace fscsynth::testing
