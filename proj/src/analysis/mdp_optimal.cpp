#include "fscsynth/analysis/mdp_optimal.h"

#include "policy_iteration.h"

namespace fscsynth {

namespace {

class MdpModel : public detail::ChoiceModel {
   public:
    explicit MdpModel(Mdp const& mdp) : mdp_(mdp) {}

    std::size_t numStates() const override { return mdp_.numStates(); }

    std::vector<StateId> possibleSuccessors(StateId s) const override {
        StateSet out;
        for (auto const& c : mdp_.choices[s]) {
            for (auto const& t : c.distribution) out.push_back(t.target);
        }
        normalize(out);
        return out;
    }

    bool canStayWithin(StateId s, std::vector<char> const& inside) const override {
        for (auto const& c : mdp_.choices[s]) {
            bool within = true;
            for (auto const& t : c.distribution) within = within && inside[t.target];
            if (within) return true;
        }
        return false;
    }

    detail::ConcreteChoice best(StateId s, std::vector<Rational> const& x, std::vector<char> const& forbidden,
                                Direction direction, bool withReward) const override {
        Choice const* chosen = nullptr;
        Rational bestLeak, bestValue;
        for (auto const& c : mdp_.choices[s]) {
            Rational leak = 0;
            Rational value = withReward ? c.reward : Rational(0);
            for (auto const& t : c.distribution) {
                if (forbidden[t.target]) {
                    leak += t.value;
                } else {
                    value += t.value * x[t.target];
                }
            }
            bool improves = !chosen || leak < bestLeak ||
                            (leak == bestLeak &&
                             (direction == Direction::Maximize ? value > bestValue : value < bestValue));
            if (improves) {
                chosen = &c;
                bestLeak = leak;
                bestValue = value;
            }
        }
        return {chosen->distribution, chosen->reward, chosen->action, {}};
    }

   private:
    Mdp const& mdp_;
};

}  // namespace

MdpOptimum mdpOptimal(Mdp const& mdp, Specification const& spec) {
    MdpModel model(mdp);
    Direction direction = spec.searchDirection();
    detail::Optimum optimum =
        spec.kind == SpecKind::ExpectedReward
            ? detail::optimizeReward(model, mdp.goal, direction)
            : detail::optimizeReach(model, mdp.goal, spec.avoidBad ? mdp.bad : StateSet{}, direction);
    MdpOptimum result;
    result.values = optimum.values;
    result.value = optimum.values[mdp.initial];
    for (auto const& c : optimum.policy) {
        result.strategy.push_back(c.row.empty() ? std::nullopt : std::optional<ActionId>(c.action));
    }
    return result;
}

}  // namespace fscsynth
