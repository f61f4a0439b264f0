#include "policy_iteration.h"

namespace fscsynth::detail {

namespace {

Rational expectation(ConcreteChoice const& c, std::vector<Rational> const& x) {
    Rational sum = 0;
    for (auto const& t : c.row) sum += t.value * x[t.target];
    return sum;
}

bool better(Rational const& candidate, Rational const& current, Direction direction) {
    return direction == Direction::Maximize ? candidate > current : candidate < current;
}

/// Chain of the policy; states without a chosen row become absorbing.
Mc<Rational> chainOf(std::size_t n, std::vector<ConcreteChoice> const& policy, std::vector<char> const& active,
                     StateSet const& goal, bool withRewards) {
    Mc<Rational> mc;
    mc.rows.resize(n);
    mc.goal = goal;
    if (withRewards) mc.rewards.assign(n, Rational(0));
    for (StateId s = 0; s < n; ++s) {
        if (active[s]) {
            mc.rows[s] = policy[s].row;
            if (withRewards) mc.rewards[s] = policy[s].reward;
        } else {
            mc.rows[s] = {{s, Rational(1)}};
        }
    }
    return mc;
}

}  // namespace

Optimum optimizeReach(ChoiceModel const& model, StateSet const& goal, StateSet const& bad, Direction direction) {
    std::size_t n = model.numStates();
    auto goalMask = toMask(goal, n);
    auto badMask = toMask(bad, n);

    // States whose optimal value is zero.
    std::vector<char> zero(n, 0);
    if (direction == Direction::Maximize) {
        Graph g(n);
        for (StateId s = 0; s < n; ++s) g[s] = model.possibleSuccessors(s);
        std::vector<char> open(n);
        for (StateId s = 0; s < n; ++s) open[s] = !goalMask[s] && !badMask[s];
        auto reach = backwardReachable(g, goalMask, open);
        for (StateId s = 0; s < n; ++s) zero[s] = !reach[s];
    } else {
        for (StateId s = 0; s < n; ++s) zero[s] = !goalMask[s];
        for (bool changed = true; changed;) {
            changed = false;
            for (StateId s = 0; s < n; ++s) {
                if (zero[s] && !badMask[s] && !model.canStayWithin(s, zero)) {
                    zero[s] = 0;
                    changed = true;
                }
            }
        }
    }
    std::vector<char> active(n);
    for (StateId s = 0; s < n; ++s) active[s] = !goalMask[s] && !zero[s];

    std::vector<Rational> x(n, Rational(0));
    for (StateId s : goal) x[s] = 1;
    std::vector<char> none(n, 0);
    Optimum result;
    result.policy.resize(n);
    for (StateId s = 0; s < n; ++s) {
        if (active[s]) result.policy[s] = model.best(s, x, none, direction, false);
    }
    while (true) {
        x = reachAvoidAll(chainOf(n, result.policy, active, goal, false), false);
        bool improved = false;
        for (StateId s = 0; s < n; ++s) {
            if (!active[s]) continue;
            auto candidate = model.best(s, x, none, direction, false);
            if (better(expectation(candidate, x), x[s], direction)) {
                result.policy[s] = std::move(candidate);
                improved = true;
            }
        }
        if (!improved) break;
    }
    for (StateId s = 0; s < n; ++s) result.values.push_back({x[s], false});
    return result;
}

Optimum optimizeReward(ChoiceModel const& model, StateSet const& goal, Direction direction) {
    std::size_t n = model.numStates();
    auto goalMask = toMask(goal, n);
    // Minimizing needs a choice reaching the goal surely; maximizing needs every choice to.
    Direction reachDirection = direction == Direction::Minimize ? Direction::Maximize : Direction::Minimize;
    Optimum reach = optimizeReach(model, goal, {}, reachDirection);
    std::vector<char> infinite(n), active(n);
    for (StateId s = 0; s < n; ++s) {
        infinite[s] = reach.values[s].value != 1;
        active[s] = !infinite[s] && !goalMask[s];
    }

    std::vector<Rational> x(n, Rational(0));
    Optimum result;
    result.policy.resize(n);
    for (StateId s = 0; s < n; ++s) {
        if (!active[s]) continue;
        // The reach-optimal choice is proper when minimizing; any choice is when maximizing.
        result.policy[s] = direction == Direction::Minimize ? reach.policy[s]
                                                            : model.best(s, x, infinite, direction, true);
    }
    std::vector<Value<Rational>> values;
    while (true) {
        values = expectedRewardAll(chainOf(n, result.policy, active, goal, true));
        for (StateId s = 0; s < n; ++s) x[s] = values[s].infinite ? Rational(0) : values[s].value;
        bool improved = false;
        for (StateId s = 0; s < n; ++s) {
            if (!active[s]) continue;
            auto candidate = model.best(s, x, infinite, direction, true);
            bool leaks = false;
            for (auto const& t : candidate.row) leaks = leaks || infinite[t.target];
            if (leaks) continue;
            if (better(candidate.reward + expectation(candidate, x), x[s], direction)) {
                result.policy[s] = std::move(candidate);
                improved = true;
            }
        }
        if (!improved) break;
    }
    for (StateId s = 0; s < n; ++s) {
        if (infinite[s]) values[s] = {Rational(0), true};
    }
    result.values = std::move(values);
    return result;
}

}  // namespace fscsynth::detail
