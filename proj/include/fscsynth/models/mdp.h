#pragma once

#include <string>
#include <vector>

#include "fscsynth/models/state_set.h"

namespace fscsynth {

struct Choice {
    ActionId action;
    std::vector<Transition<Rational>> distribution;
    Rational reward = 0;

    friend bool operator==(Choice const&, Choice const&) = default;
};

/// Explicit MDP. Action ids index `actions`, which is sorted lexicographically,
/// so the id order coincides with the label order. Choices per state are sorted by action.
struct Mdp {
    std::vector<std::string> actions;
    std::vector<std::vector<Choice>> choices;
    StateId initial = 0;
    StateSet goal;
    StateSet bad;

    std::size_t numStates() const { return choices.size(); }
    std::vector<ActionId> enabledActions(StateId s) const;
    Choice const* findChoice(StateId s, ActionId a) const;
    bool hasRewards() const;

    friend bool operator==(Mdp const&, Mdp const&) = default;
};

}  // namespace fscsynth
