#pragma once

#include <optional>
#include <vector>

#include "fscsynth/analysis/mc_check.h"
#include "fscsynth/models/mdp.h"
#include "fscsynth/models/specification.h"

namespace fscsynth {

struct MdpOptimum {
    Value<Rational> value;               // at the initial state
    std::vector<Value<Rational>> values;  // per state
    // Memoryless deterministic optimal strategy; unset at goal states and where the
    // value is fixed by graph analysis alone.
    std::vector<std::optional<ActionId>> strategy;
};

/// Exact optimum of the fully observable MDP in the specification's search direction
/// (policy iteration with exact evaluation).
MdpOptimum mdpOptimal(Mdp const& mdp, Specification const& spec);

}  // namespace fscsynth
