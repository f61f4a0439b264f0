#pragma once

#include <string>
#include <vector>

#include "fscsynth/analysis/region.h"
#include "fscsynth/synthesis/pso.h"

namespace fscsynth {

struct PermissiveCandidate {
    Region region;
    std::vector<Instantiation> witnesses;
};

struct PermissiveResult {
    PermissiveCandidate candidate;
    bool verified = false;
    // Worst value over the region: the lower bound for lower-bound specifications,
    // the upper bound otherwise. Exact value for point regions.
    Value<Rational> bound;
    // Why verification was not attempted, if it was not.
    std::string note;
};

struct PermissiveConfig {
    SearchConfig search;
    std::size_t witnesses = 3;
    // Searches run with seeds search.seed, search.seed + 1, ...
    std::size_t maxSearches = 10;
};

/// Bounding box of the witnesses intersected with [eps, 1 - eps], verified when the
/// region bounds show that every point satisfies the specification. A single witness
/// (or several equal ones) gives a point region checked directly.
PermissiveResult permissiveFromWitnesses(Pmc const& pmc, Specification const& spec,
                                         std::vector<Instantiation> const& witnesses, Rational const& eps);

/// Collects satisfying witnesses with repeated searches. Fewer than requested gives
/// the point region of the best witness (or of the best instantiation found at all).
PermissiveResult findPermissive(Pmc const& pmc, Specification const& spec, PermissiveConfig const& config = {});

}  // namespace fscsynth
