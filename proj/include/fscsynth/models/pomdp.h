#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fscsynth/models/mdp.h"

namespace fscsynth {

struct Pomdp {
    Mdp mdp;
    std::size_t numObservations = 0;
    std::vector<ObservationId> observation;

    std::size_t numStates() const { return mdp.numStates(); }
    /// A(z), taken from any state carrying z. Empty for unused observations.
    std::vector<ActionId> actionsOf(ObservationId z) const;
    /// First state carrying z, if any.
    std::optional<StateId> representative(ObservationId z) const;

    /// Throws ModelError when a model requirement is violated.
    void validate() const;

    friend bool operator==(Pomdp const&, Pomdp const&) = default;
};

/// Builds the action table from labels and sorts choices; use after assembling by label.
struct PomdpBuilder {
    struct Edge {
        StateId source;
        std::string action;
        StateId target;
        Rational probability;
    };

    std::size_t numStates = 0;
    StateId initial = 0;
    std::size_t numObservations = 0;
    std::vector<ObservationId> observation;
    std::vector<Edge> edges;
    std::vector<std::tuple<StateId, std::string, Rational>> rewards;
    StateSet goal;
    StateSet bad;

    Pomdp build() const;
};

}  // namespace fscsynth
