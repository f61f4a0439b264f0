#pragma once

#include <vector>

#include "fscsynth/analysis/mc_check.h"
#include "fscsynth/models/specification.h"

namespace fscsynth::detail {

/// One resolved choice of a state: a concrete distribution and reward.
struct ConcreteChoice {
    std::vector<Transition<Rational>> row;
    Rational reward = 0;
    ActionId action = 0;              // for MDPs
    std::vector<Rational> point;      // for relaxed pMC rows: values of the row's parameters
};

/// A model with (possibly infinitely many) choices per state, accessed through an oracle.
class ChoiceModel {
   public:
    virtual ~ChoiceModel() = default;
    virtual std::size_t numStates() const = 0;
    /// Targets reached with positive probability under some choice.
    virtual std::vector<StateId> possibleSuccessors(StateId s) const = 0;
    /// Whether some choice puts all of its mass inside `inside`.
    virtual bool canStayWithin(StateId s, std::vector<char> const& inside) const = 0;
    /// Choice that first minimizes the mass sent to `forbidden`, then optimizes
    /// (reward if `withReward`) + sum P(t) x(t) in `direction`.
    virtual ConcreteChoice best(StateId s, std::vector<Rational> const& x, std::vector<char> const& forbidden,
                                Direction direction, bool withReward) const = 0;
};

struct Optimum {
    std::vector<Value<Rational>> values;
    // Chosen resolution per state; empty rows for goal states and states with fixed value.
    std::vector<ConcreteChoice> policy;
};

/// Optimal probability of "not bad until goal" by policy iteration with exact evaluation.
Optimum optimizeReach(ChoiceModel const& model, StateSet const& goal, StateSet const& bad, Direction direction);

/// Optimal expected reward until the goal; infinite where the goal is missed with positive
/// probability under every choice (minimizing) or under some choice (maximizing).
Optimum optimizeReward(ChoiceModel const& model, StateSet const& goal, Direction direction);

}  // namespace fscsynth::detail
