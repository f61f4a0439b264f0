#include "fscsynth/models/mdp.h"

namespace fscsynth {

std::vector<ActionId> Mdp::enabledActions(StateId s) const {
    std::vector<ActionId> result;
    for (auto const& c : choices[s]) result.push_back(c.action);
    return result;
}

Choice const* Mdp::findChoice(StateId s, ActionId a) const {
    for (auto const& c : choices[s]) {
        if (c.action == a) return &c;
    }
    return nullptr;
}

bool Mdp::hasRewards() const {
    for (auto const& row : choices) {
        for (auto const& c : row) {
            if (c.reward != 0) return true;
        }
    }
    return false;
}

}  // namespace fscsynth
